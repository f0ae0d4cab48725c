#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "paracontact/report.hpp"

namespace fs = std::filesystem;
using namespace paracontact;

namespace {

struct Options {
  std::string format = "json";
  double tolerance = kDefaultEps;
  std::string output;
  std::string path;
  std::string alpha, a, b, c, mode, name, params;
};

void emit(const Options& opt, const json& doc) {
  const std::string text = opt.format == "text" ? render_text(doc) : doc.dump(2) + "\n";
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw Error(ErrorKind::InvalidParams, "cannot write " + opt.output);
  out << text;
}

template <class S>
S parse_scalar(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorKind::InvalidParams, std::string("--") + flag + " is required");
  return scalar_traits<S>::from_string(text);
}

template <class S>
std::optional<S> optional_scalar(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return scalar_traits<S>::from_string(text);
}

int cmd_validate(const Options& opt) {
  const AnyModel any = load_model(opt.path, opt.tolerance);
  return std::visit(
      [&](const auto& m) {
        const auto rep = validate_structure(m);
        emit(opt, validation_json(rep));
        return rep.pass() ? 0 : 1;
      },
      any);
}

int analyze_file(const std::string& path, double eps, json& out) {
  const AnyModel any = load_model(path, eps);
  return std::visit(
      [&](const auto& m) {
        out = analysis_report(m);
        return out["validation"]["pass"].template get<bool>() ? 0 : 1;
      },
      any);
}

int cmd_analyze(const Options& opt) {
  if (!fs::is_directory(opt.path)) {
    json report;
    int code = analyze_file(opt.path, opt.tolerance, report);
    emit(opt, report);
    return code;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opt.path))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  json batch = json::array();
  int worst = 0;
  for (const auto& f : files) {
    json item;
    item["file"] = f.filename().string();
    int code = 0;
    try {
      json report;
      code = analyze_file(f.string(), opt.tolerance, report);
      item["report"] = std::move(report);
    } catch (const Error& e) {
      std::cerr << f.filename().string() << ": " << e.what() << "\n";
      item["error"] = e.what();
      code = exit_code_for(e.kind());
    }
    item["exit_code"] = code;
    worst = std::max(worst, code);
    batch.push_back(std::move(item));
  }
  emit(opt, batch);
  return worst;
}

int cmd_identities(const Options& opt) {
  const AnyModel any = load_model(opt.path, opt.tolerance);
  return std::visit(
      [&](const auto& m) {
        const auto v = validate_structure(m);
        if (!v.pass()) {
          emit(opt, json{{"validation", validation_json(v)}});
          return 1;
        }
        const auto geo = compute_geometry(m);
        const auto rep = solve_nullity(geo);
        json j;
        j["model"] = m.name;
        j["nullity"] = nullity_json(rep);
        j["identities"] = identities_json(all_identities(geo, rep));
        emit(opt, j);
        return 0;
      },
      any);
}

int cmd_deform(const Options& opt) {
  const AnyModel any = load_model(opt.path, opt.tolerance);
  return std::visit(
      [&]<class S>(const Model<S>& m) {
        const auto t = d_homothetic(m, parse_scalar<S>(opt.alpha, "alpha"));
        emit(opt, transform_json(t));
        return t.pass() ? 0 : 1;
      },
      any);
}

int cmd_convert(const Options& opt) {
  const AnyModel any = load_model(opt.path, opt.tolerance);
  return std::visit(
      [&]<class S>(const Model<S>& m) {
        TransformResult<S> t;
        if (opt.mode == "capar1")
          t = paracontact_from_contact(m, ContactToParaMode::via_h);
        else if (opt.mode == "sphere1")
          t = paracontact_from_contact(m, ContactToParaMode::via_phih, optional_scalar<S>(opt.c));
        else if (opt.mode == "principal1")
          t = contact_from_paracontact_pos(m);
        else if (opt.mode == "def2")
          t = contact_from_paracontact_neg(m);
        else if (opt.mode == "family")
          t = contact_family(m, parse_scalar<S>(opt.a, "a"), parse_scalar<S>(opt.b, "b"));
        else
          throw Error(ErrorKind::InvalidParams, "unknown mode '" + opt.mode + "'");
        emit(opt, transform_json(t));
        return t.pass() ? 0 : 1;
      },
      any);
}

int cmd_example(const Options& opt) {
  std::vector<Rational> params;
  std::stringstream ss(opt.params);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) params.push_back(scalar_traits<Rational>::from_string(item));
  const auto m = builtin_example<Rational>(opt.name, params);
  Options raw = opt;
  raw.format = "json";
  emit(raw, serialize_model(m));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze paracontact and contact metric structures on Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tolerance", opt.tolerance, "Zero tolerance in float mode");
  app.add_option("--output", opt.output, "Write the result to this file");

  auto* validate = app.add_subcommand("validate", "Check the structure axioms");
  validate->add_option("path", opt.path, "Model file")->required();
  auto* analyze = app.add_subcommand("analyze", "Full analysis report for a model file or a directory");
  analyze->add_option("path", opt.path, "Model file or directory")->required();
  auto* identities = app.add_subcommand("identities", "Identity table");
  identities->add_option("path", opt.path, "Model file")->required();
  auto* deform = app.add_subcommand("deform", "D-homothetic deformation");
  deform->add_option("path", opt.path, "Model file")->required();
  deform->add_option("--alpha", opt.alpha, "Deformation constant")->required();
  auto* convert = app.add_subcommand("convert", "Contact/paracontact constructions");
  convert->add_option("path", opt.path, "Model file")->required();
  convert->add_option("--mode", opt.mode, "Construction")
      ->required()
      ->check(CLI::IsMember({"capar1", "sphere1", "principal1", "def2", "family"}));
  convert->add_option("--a", opt.a, "family: a");
  convert->add_option("--b", opt.b, "family: b");
  convert->add_option("--c", opt.c, "sphere1: c");
  auto* example = app.add_subcommand("example", "Write a builtin model");
  example->add_option("name", opt.name, "fix-a, fix-b or fix-c")->required();
  example->add_option("--params", opt.params, "Comma-separated parameters");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(opt);
    if (*analyze) return cmd_analyze(opt);
    if (*identities) return cmd_identities(opt);
    if (*deform) return cmd_deform(opt);
    if (*convert) return cmd_convert(opt);
    if (*example) return cmd_example(opt);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "Error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
