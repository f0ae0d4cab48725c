#include "paracontact/frame.hpp"

#include "paracontact/linalg.hpp"

namespace paracontact {

template <class S>
FrameAlgebra<S>::FrameAlgebra(int dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), c_(static_cast<std::size_t>(dim) * dim * dim, S(0)) {
  if (labels_.empty())
    for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
  if (static_cast<int>(labels_.size()) != dim)
    throw Error(ErrorKind::DimensionMismatch, "basis label count differs from dimension");
}

template <class S>
void FrameAlgebra<S>::set_bracket(int i, int j, const Vec<S>& v) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || v.size() != dim_)
    throw Error(ErrorKind::DimensionMismatch, "bracket index out of range");
  if (i == j) {
    if (!is_zero_matrix(v, 0.0))
      throw Error(ErrorKind::ParseError, "bracket [e_i, e_i] must vanish");
    return;
  }
  for (int k = 0; k < dim_; ++k) {
    c_[index(k, i, j)] = v(k);
    c_[index(k, j, i)] = S(-v(k));
  }
}

template <class S>
Vec<S> FrameAlgebra<S>::bracket(int i, int j) const {
  Vec<S> out(dim_);
  for (int k = 0; k < dim_; ++k) out(k) = c(k, i, j);
  return out;
}

template <class S>
Vec<S> FrameAlgebra<S>::bracket(const Vec<S>& u, const Vec<S>& v) const {
  Vec<S> out = Vec<S>::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (u(i) == S(0)) continue;
    for (int j = 0; j < dim_; ++j) {
      if (v(j) == S(0)) continue;
      S w = u(i) * v(j);
      for (int k = 0; k < dim_; ++k) out(k) += w * c(k, i, j);
    }
  }
  return out;
}

template <class S>
Mat<S> FrameAlgebra<S>::ad(const Vec<S>& u) const {
  Mat<S> out(dim_, dim_);
  for (int j = 0; j < dim_; ++j) out.col(j) = bracket(u, unit_vector<S>(dim_, j));
  return out;
}

template <class S>
std::vector<JacobiViolationEntry<S>> validate_jacobi(const FrameAlgebra<S>& a, double eps) {
  std::vector<JacobiViolationEntry<S>> out;
  const int d = a.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          S sum(0);
          for (int m = 0; m < d; ++m)
            sum += a.c(m, i, j) * a.c(l, m, k) + a.c(m, j, k) * a.c(l, m, i) +
                   a.c(m, k, i) * a.c(l, m, j);
          if (!is_zero(sum, eps)) out.push_back({i, j, k, l, sum});
        }
  return out;
}

const char* kind_name(StructureKind kind) {
  return kind == StructureKind::paracontact ? "paracontact" : "contact";
}

template <class S>
Model<S> make_model(FrameAlgebra<S> algebra, StructureKind kind, Mat<S> phi, Vec<S> xi, Mat<S> gram,
                    std::optional<Vec<S>> eta, std::string name, double eps) {
  const int d = algebra.dim();
  if (d < 1 || d % 2 == 0)
    throw Error(ErrorKind::DimensionMismatch, "dimension must be odd, got " + std::to_string(d));
  if (phi.rows() != d || phi.cols() != d || gram.rows() != d || gram.cols() != d || xi.size() != d ||
      (eta && eta->size() != d))
    throw Error(ErrorKind::DimensionMismatch, "structure tensors do not match dimension " +
                                                  std::to_string(d));
  auto violations = validate_jacobi(algebra, eps);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw Error(ErrorKind::JacobiViolation,
                "Jacobi sum nonzero at (i,j,k,l) = (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                    "," + std::to_string(v.k) + "," + std::to_string(v.l) + "): " + to_string(v.residual));
  }
  Model<S> m;
  m.algebra = std::move(algebra);
  m.structure.kind = kind;
  m.structure.phi = std::move(phi);
  m.structure.xi = std::move(xi);
  m.structure.gram = std::move(gram);
  m.structure.eta = eta ? *eta : Vec<S>(m.structure.gram * m.structure.xi);
  m.structure.n = (d - 1) / 2;
  m.name = std::move(name);
  m.eps = eps;
  return m;
}

namespace {

template <class S>
Vec<S> combo(int d, std::initializer_list<std::pair<int, S>> terms) {
  Vec<S> v = Vec<S>::Zero(d);
  for (const auto& [k, c] : terms) v(k) += c;
  return v;
}

// e1<->e3, e2<->e4, xi = e5 -> 0, shared by both five-dimensional examples.
template <class S>
Mat<S> swap_phi() {
  Mat<S> phi = Mat<S>::Zero(5, 5);
  phi(2, 0) = phi(3, 1) = phi(0, 2) = phi(1, 3) = S(1);
  return phi;
}

template <class S>
Model<S> fix_a(const S& a, const S& b) {
  if (a * a - b * b == S(0))
    throw Error(ErrorKind::InvalidParams, "fix-a requires alpha^2 - beta^2 != 0");
  FrameAlgebra<S> alg(5);
  const S two(2);
  alg.set_bracket(0, 4, combo<S>(5, {{1, a * b / two}, {2, a * a / two}}));
  alg.set_bracket(1, 4, combo<S>(5, {{0, S(-a * b / two)}, {3, a * a / two}}));
  alg.set_bracket(2, 4, combo<S>(5, {{0, S(-b * b / two)}, {3, a * b / two}}));
  alg.set_bracket(3, 4, combo<S>(5, {{1, S(-b * b / two)}, {2, S(-a * b / two)}}));
  alg.set_bracket(0, 1, combo<S>(5, {{1, a}}));
  alg.set_bracket(0, 2, combo<S>(5, {{1, S(-b)}, {4, two}}));
  alg.set_bracket(1, 2, combo<S>(5, {{0, b}, {3, S(-a)}}));
  alg.set_bracket(1, 3, combo<S>(5, {{2, a}, {4, two}}));
  alg.set_bracket(2, 3, combo<S>(5, {{2, S(-b)}}));
  Mat<S> gram = Mat<S>::Zero(5, 5);
  gram.diagonal() << S(-1), S(-1), S(1), S(1), S(1);
  auto m = make_model<S>(std::move(alg), StructureKind::paracontact, swap_phi<S>(),
                         unit_vector<S>(5, 4), gram, std::nullopt, "fix-a");
  m.params = {{"alpha", to_string(a)}, {"beta", to_string(b)}};
  return m;
}

template <class S>
Model<S> fix_b(const S& a, const S& b) {
  if (!(a * b > S(0))) throw Error(ErrorKind::InvalidParams, "fix-b requires alpha * beta > 0");
  FrameAlgebra<S> alg(5);
  const S ab = a * b;
  alg.set_bracket(0, 4, combo<S>(5, {{0, ab}, {1, ab}}));
  alg.set_bracket(1, 4, combo<S>(5, {{0, ab}, {1, ab}}));
  alg.set_bracket(2, 4, combo<S>(5, {{2, S(-ab)}, {3, ab}}));
  alg.set_bracket(3, 4, combo<S>(5, {{2, ab}, {3, S(-ab)}}));
  alg.set_bracket(0, 1, combo<S>(5, {{0, a}, {1, a}}));
  alg.set_bracket(0, 2, combo<S>(5, {{1, b}, {3, a}, {4, S(-2)}}));
  alg.set_bracket(0, 3, combo<S>(5, {{1, b}, {2, a}}));
  alg.set_bracket(1, 2, combo<S>(5, {{0, b}, {3, S(-a)}}));
  alg.set_bracket(1, 3, combo<S>(5, {{0, b}, {2, S(-a)}, {4, S(2)}}));
  alg.set_bracket(2, 3, combo<S>(5, {{2, S(-b)}, {3, b}}));
  Mat<S> gram = Mat<S>::Zero(5, 5);
  gram.diagonal() << S(1), S(-1), S(-1), S(1), S(1);
  auto m = make_model<S>(std::move(alg), StructureKind::paracontact, swap_phi<S>(),
                         unit_vector<S>(5, 4), gram, std::nullopt, "fix-b");
  m.params = {{"alpha", to_string(a)}, {"beta", to_string(b)}};
  return m;
}

template <class S>
Model<S> fix_c() {
  FrameAlgebra<S> alg(3, {"e1", "e2", "xi"});
  alg.set_bracket(0, 1, combo<S>(3, {{2, S(-2)}}));
  Mat<S> phi = Mat<S>::Zero(3, 3);
  phi(1, 0) = phi(0, 1) = S(1);
  Mat<S> gram = Mat<S>::Zero(3, 3);
  gram.diagonal() << S(1), S(-1), S(1);
  return make_model<S>(std::move(alg), StructureKind::paracontact, phi, unit_vector<S>(3, 2), gram,
                       std::nullopt, "fix-c");
}

}  // namespace

std::vector<std::string> builtin_example_names() { return {"fix-a", "fix-b", "fix-c"}; }

template <class S>
Model<S> builtin_example(const std::string& name, const std::vector<S>& params) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi)
      throw Error(ErrorKind::InvalidParams, name + " takes " + std::to_string(lo) + ".." +
                                                std::to_string(hi) + " parameters");
  };
  if (name == "fix-a") {
    need(0, 2);
    return fix_a<S>(params.size() > 0 ? params[0] : S(2), params.size() > 1 ? params[1] : S(0));
  }
  if (name == "fix-b") {
    need(0, 2);
    return fix_b<S>(params.size() > 0 ? params[0] : S(1), params.size() > 1 ? params[1] : S(1));
  }
  if (name == "fix-c") {
    need(0, 0);
    return fix_c<S>();
  }
  throw Error(ErrorKind::InvalidParams, "unknown example '" + name + "'");
}

template <class To, class From>
Model<To> convert_model(const Model<From>& m) {
  if constexpr (std::is_same_v<To, From>) {
    return m;
  } else {
    const int d = m.dim();
    FrameAlgebra<To> alg(d, m.algebra.labels());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) alg.set_bracket(i, j, cast_matrix<To, From>(Mat<From>(m.algebra.bracket(i, j))).col(0));
    Model<To> out;
    out.algebra = std::move(alg);
    out.structure.kind = m.structure.kind;
    out.structure.phi = cast_matrix<To, From>(m.phi());
    out.structure.xi = cast_matrix<To, From>(Mat<From>(m.xi())).col(0);
    out.structure.gram = cast_matrix<To, From>(m.gram());
    out.structure.eta = cast_matrix<To, From>(Mat<From>(m.eta())).col(0);
    out.structure.n = m.n();
    out.name = m.name;
    out.params = m.params;
    out.eps = m.eps;
    return out;
  }
}

#define PARACONTACT_INSTANTIATE(S)                                                                 \
  template class FrameAlgebra<S>;                                                                 \
  template std::vector<JacobiViolationEntry<S>> validate_jacobi<S>(const FrameAlgebra<S>&, double); \
  template Model<S> make_model<S>(FrameAlgebra<S>, StructureKind, Mat<S>, Vec<S>, Mat<S>,          \
                                  std::optional<Vec<S>>, std::string, double);                      \
  template Model<S> builtin_example<S>(const std::string&, const std::vector<S>&);

PARACONTACT_INSTANTIATE(Rational)
PARACONTACT_INSTANTIATE(double)

template Model<double> convert_model<double, Rational>(const Model<Rational>&);
template Model<Rational> convert_model<Rational, Rational>(const Model<Rational>&);
template Model<double> convert_model<double, double>(const Model<double>&);

}  // namespace paracontact
