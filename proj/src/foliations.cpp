#include "paracontact/foliations.hpp"

namespace paracontact {

const char* distribution_name(DistributionKind k) {
  switch (k) {
    case DistributionKind::D_plus: return "D_plus";
    case DistributionKind::D_minus: return "D_minus";
    case DistributionKind::D_h_pos: return "D_h_pos";
    case DistributionKind::D_h_neg: return "D_h_neg";
    case DistributionKind::D_phih_pos: return "D_phih_pos";
    case DistributionKind::D_phih_neg: return "D_phih_neg";
  }
  return "unknown";
}

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive";
    case Definiteness::negative: return "negative";
    case Definiteness::indefinite: return "indefinite";
  }
  return "unknown";
}

namespace {

template <class S>
void require_off_boundary(const NullityReport<S>& rep, const char* what) {
  if (!rep.is_nullity) throw Error(ErrorKind::NotNullity, std::string(what) + " needs a (kappa, mu) model");
  if (rep.cls == NullityClass::equal)
    throw Error(ErrorKind::ClassBoundary, std::string(what) + " is undefined for kappa = -1");
}

template <class S>
S lambda_of(const NullityReport<S>& rep) {
  return require_lambda(rep);
}

template <class S>
void bump(S& worst, const S& r) {
  if (r > worst) worst = r;
}

template <class S>
Mat<S> independent_columns(const Mat<S>& P, double eps) {
  Mat<S> acc(P.rows(), 0);
  for (Eigen::Index j = 0; j < P.cols(); ++j) {
    Mat<S> trial(P.rows(), acc.cols() + 1);
    trial << acc, P.col(j);
    if (rank<S>(trial, eps) == trial.cols()) acc = trial;
  }
  return acc;
}

template <class S>
std::vector<Vec<S>> to_vectors(const Mat<S>& M) {
  std::vector<Vec<S>> out;
  for (Eigen::Index j = 0; j < M.cols(); ++j) out.push_back(M.col(j));
  return out;
}

template <class S>
Mat<S> restricted_gram(const Mat<S>& G, const Mat<S>& V) {
  return V.transpose() * G * V;
}

template <class S>
Mat<S> pang_defining(const Geometry<S>& geo, const Mat<S>& V) {
  const auto& alg = geo.model.algebra;
  const Vec<S>& xi = geo.model.xi();
  Mat<S> out(V.cols(), V.cols());
  for (Eigen::Index i = 0; i < V.cols(); ++i) {
    Vec<S> bracket = alg.bracket(xi, Vec<S>(V.col(i)));
    for (Eigen::Index j = 0; j < V.cols(); ++j) out(i, j) = S(2) * bracket.dot(geo.deta * V.col(j));
  }
  return out;
}

template <class S>
Definiteness from_signature(const Signature& s, int n) {
  if (s.positive == n) return Definiteness::positive;
  if (s.negative == n) return Definiteness::negative;
  return Definiteness::indefinite;
}

}  // namespace

template <class S>
Mat<S> DistributionBasis<S>::matrix() const {
  if (vectors.empty()) return Mat<S>(0, 0);
  Mat<S> out(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = vectors[i];
  return out;
}

template <class S>
Projectors<S> projectors(const Geometry<S>& geo, const NullityReport<S>& rep) {
  require_off_boundary(rep, "projectors");
  const auto& m = geo.model;
  const int d = m.dim();
  Projectors<S> p;
  p.lambda = lambda_of(rep);
  p.A = rep.cls == NullityClass::above ? geo.h : Mat<S>(m.phi() * geo.h);
  const Mat<S> I = Mat<S>::Identity(d, d);
  p.P0 = m.xi() * m.eta().transpose();
  const Mat<S> Pi = I - p.P0;
  const S half = S(1) / S(2);
  p.P_plus = half * (Pi + p.A / p.lambda);
  p.P_minus = half * (Pi - p.A / p.lambda);
  S worst(0);
  bump(worst, max_abs(Mat<S>(p.P_plus * p.P_plus - p.P_plus)));
  bump(worst, max_abs(Mat<S>(p.P_minus * p.P_minus - p.P_minus)));
  bump(worst, max_abs(Mat<S>(p.P_plus * p.P_minus)));
  bump(worst, max_abs(Mat<S>(p.P_plus + p.P_minus + p.P0 - I)));
  bump(worst, max_abs(Mat<S>(p.A * p.P_plus - p.lambda * p.P_plus)));
  bump(worst, max_abs(Mat<S>(p.A * p.P_minus + p.lambda * p.P_minus)));
  p.algebra_residual = worst;
  if (!is_zero(worst, m.eps))
    throw Error(ErrorKind::PostconditionFailed, "projector algebra fails, residual " + to_string(worst));
  return p;
}

template <class S>
std::pair<Mat<S>, Mat<S>> phi_projectors(const Model<S>& m) {
  const int d = m.dim();
  const Mat<S> Pi = Mat<S>::Identity(d, d) - m.xi() * m.eta().transpose();
  const S half = S(1) / S(2);
  return {half * (Pi + m.phi()), half * (Pi - m.phi())};
}

template <class S>
DistributionBasis<S> distribution_basis(const Geometry<S>& geo, const NullityReport<S>& rep, DistributionKind k) {
  const auto& m = geo.model;
  DistributionBasis<S> b;
  b.kind = k;
  Mat<S> V;
  if (k == DistributionKind::D_plus || k == DistributionKind::D_minus) {
    auto [pp, pm] = phi_projectors(m);
    const bool plus = k == DistributionKind::D_plus;
    V = independent_columns<S>(plus ? pp : pm, m.eps);
    const S sign = plus ? S(1) : S(-1);
    b.eigen_residual = max_abs(Mat<S>(m.phi() * V - sign * V));
  } else {
    const bool wants_h = k == DistributionKind::D_h_pos || k == DistributionKind::D_h_neg;
    require_off_boundary(rep, "eigendistribution basis");
    if (wants_h != (rep.cls == NullityClass::above))
      throw Error(ErrorKind::ClassBoundary, std::string(distribution_name(k)) + " is not diagonal in this class");
    auto p = projectors(geo, rep);
    const bool pos = k == DistributionKind::D_h_pos || k == DistributionKind::D_phih_pos;
    V = orthogonal_basis<S>(m.gram(), pos ? p.P_plus : p.P_minus, m.eps);
    if (V.cols() < m.n()) V = independent_columns<S>(pos ? p.P_plus : p.P_minus, m.eps);
    const S ev = pos ? p.lambda : S(-p.lambda);
    b.eigen_residual = max_abs(Mat<S>(p.A * V - ev * V));
  }
  b.vectors = to_vectors(V);
  b.signature = signature_ldl<S>(restricted_gram<S>(m.gram(), V), m.eps);
  return b;
}

template <class S>
PhiBasis<S> phi_basis(const Geometry<S>& geo, const NullityReport<S>& rep) {
  require_off_boundary(rep, "phi basis");
  const auto& m = geo.model;
  const bool above = rep.cls == NullityClass::above;
  auto basis = distribution_basis(geo, rep, above ? DistributionKind::D_h_pos : DistributionKind::D_phih_pos);
  PhiBasis<S> out;
  std::vector<Vec<S>> pos, neg;
  for (const auto& v : basis.vectors) {
    S gv = m.g(v, v);
    if (is_zero(gv, m.eps)) throw Error(ErrorKind::NormalizationFailure, "null vector in the eigendistribution basis");
    (gv > S(0) ? pos : neg).push_back(v);
  }
  out.r = static_cast<int>(pos.size());
  out.s = static_cast<int>(neg.size());
  out.xs = pos;
  out.xs.insert(out.xs.end(), neg.begin(), neg.end());
  std::vector<Vec<S>> scaled;
  bool exact = true;
  for (const auto& v : out.xs) {
    auto root = scalar_traits<S>::sqrt(abs_value<S>(m.g(v, v)));
    if (!root) {
      exact = false;
      break;
    }
    scaled.push_back(Vec<S>(v / *root));
  }
  if (exact) {
    out.xs = scaled;
    out.normalized = true;
  } else {
    out.notes.push_back("basis left unnormalised: a length is irrational");
  }
  for (const auto& v : out.xs) out.ys.push_back(m.phi() * v);
  return out;
}

template <class S>
bool is_involutive(const FrameAlgebra<S>& alg, const std::vector<Vec<S>>& basis, double eps) {
  if (basis.empty()) return true;
  const Eigen::Index d = basis.front().size();
  Mat<S> V(d, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) V.col(static_cast<Eigen::Index>(i)) = basis[i];
  const int r = rank<S>(V, eps);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Mat<S> trial(d, V.cols() + 1);
      trial << V, alg.bracket(basis[i], basis[j]);
      if (rank<S>(trial, eps) != r) return false;
    }
  return true;
}

template <class S>
PangForm<S> pang_invariant(const Geometry<S>& geo, const NullityReport<S>& rep, const DistributionBasis<S>& basis) {
  const auto& m = geo.model;
  if (!is_involutive(m.algebra, basis.vectors, m.eps))
    throw Error(ErrorKind::NotInvolutive, std::string(distribution_name(basis.kind)) + " is not involutive");
  PangForm<S> f;
  f.kind = basis.kind;
  const Mat<S> V = basis.matrix();
  f.defining = pang_defining(geo, V);
  f.signature = signature_ldl<S>(f.defining, m.eps);
  const Mat<S> gV = restricted_gram<S>(m.gram(), V);
  const S one(1), two(2);
  const S mu = rep.mu_or_zero();
  switch (basis.kind) {
    case DistributionKind::D_plus:
    case DistributionKind::D_minus:
      f.closed = Mat<S>(two * (geo.h * V).transpose() * m.gram() * V);
      f.closed_tag = "invariant1";
      break;
    case DistributionKind::D_h_pos:
      f.closed = Mat<S>(-two * (one - mu / two - lambda_of(rep)) * gV);
      f.closed_tag = "pang1";
      break;
    case DistributionKind::D_h_neg:
      f.closed = Mat<S>(-two * (one - mu / two + lambda_of(rep)) * gV);
      f.closed_tag = "pang2";
      break;
    case DistributionKind::D_phih_pos:
      f.closed = Mat<S>((mu - two) * gV);
      f.closed_tag = "pang5";
      break;
    case DistributionKind::D_phih_neg:
      f.closed = Mat<S>((mu - two) * gV);
      f.closed_tag = "pang6";
      break;
  }
  if (f.closed) f.residual = max_abs(Mat<S>(*f.closed - f.defining));
  return f;
}

template <class S>
LibermannMap<S> libermann_map(const Geometry<S>& geo, const NullityReport<S>& rep) {
  require_off_boundary(rep, "Libermann map");
  if (rep.cls != NullityClass::above)
    throw Error(ErrorKind::ClassBoundary, "Libermann map closed forms need kappa > -1");
  const auto& m = geo.model;
  auto plus = distribution_basis(geo, rep, DistributionKind::D_plus);
  auto minus = distribution_basis(geo, rep, DistributionKind::D_minus);
  const Mat<S> Vp = plus.matrix(), Vm = minus.matrix();
  const int n = m.n();
  for (const auto* V : {&Vp, &Vm})
    if (signature_ldl<S>(pang_defining(geo, *V), m.eps).zero > 0 || V->cols() != n)
      throw Error(ErrorKind::DegeneratePang, "Pang form of a Legendre foliation of phi is degenerate");
  auto [Pp, Pm] = phi_projectors(m);
  const S c = S(2) * (rep.kappa + S(1));
  LibermannMap<S> L;
  L.lambda_minus = -(geo.h * Pp) / c;
  L.lambda_plus = (geo.h * Pm) / c;
  S sq(0), ker(0), rel(0);
  const Vec<S>& xi = m.xi();
  for (int side = 0; side < 2; ++side) {
    const Mat<S>& Lam = side == 0 ? L.lambda_plus : L.lambda_minus;
    const Mat<S>& own = side == 0 ? Vp : Vm;
    const Mat<S>& Pown = side == 0 ? Pp : Pm;
    bump(sq, max_abs(Mat<S>(Lam * Lam)));
    bump(ker, max_abs(Vec<S>(Lam * xi)));
    bump(ker, max_abs(Mat<S>(Lam * own)));
    bump(ker, max_abs(Mat<S>(Pown * Lam - Lam)));
    // Pi_F(Lambda Z, X) = deta(Z, X) for X in F
    for (int z = 0; z < m.dim(); ++z) {
      Vec<S> Z = unit_vector<S>(m.dim(), z);
      Vec<S> LZ = Lam * Z;
      Vec<S> bracket = m.algebra.bracket(xi, LZ);
      for (Eigen::Index j = 0; j < own.cols(); ++j) {
        S lhs = S(2) * bracket.dot(geo.deta * own.col(j));
        S rhs = Z.dot(geo.deta * own.col(j));
        bump(rel, abs_value<S>(S(lhs - rhs)));
      }
    }
  }
  L.square_residual = sq;
  L.kernel_residual = ker;
  L.relation_residual = rel;
  return L;
}

template <class S>
DefinitenessReport<S> definiteness(const Geometry<S>& geo, const NullityReport<S>& rep) {
  require_off_boundary(rep, "definiteness");
  const auto& m = geo.model;
  const int n = m.n();
  const bool above = rep.cls == NullityClass::above;
  auto b = distribution_basis(geo, rep, above ? DistributionKind::D_h_pos : DistributionKind::D_phih_pos);
  DefinitenessReport<S> out;
  out.index = b.signature.negative;
  const int pos_index = above ? 0 : n;
  const int neg_index = above ? n : 0;
  if (out.index == pos_index)
    out.verdict = Definiteness::positive;
  else if (out.index == neg_index)
    out.verdict = Definiteness::negative;
  else
    out.verdict = Definiteness::indefinite;
  auto plus = distribution_basis(geo, rep, DistributionKind::D_plus);
  auto minus = distribution_basis(geo, rep, DistributionKind::D_minus);
  out.pang_plus = signature_ldl<S>(pang_defining(geo, plus.matrix()), m.eps);
  out.pang_minus = signature_ldl<S>(pang_defining(geo, minus.matrix()), m.eps);
  auto dp = from_signature<S>(out.pang_plus, n), dm = from_signature<S>(out.pang_minus, n);
  out.from_pang = dp == dm ? dp : Definiteness::indefinite;
  return out;
}

template <class S>
BiParacontact<S> almost_biparacontact(const Geometry<S>& geo, const NullityReport<S>& rep) {
  require_off_boundary(rep, "almost bi-paracontact structure");
  const auto& m = geo.model;
  const S lam = lambda_of(rep);
  const Mat<S> ph = m.phi() * geo.h;
  BiParacontact<S> b;
  b.phi1 = m.phi();
  if (rep.cls == NullityClass::above) {
    b.phi2 = geo.h / lam;
    b.phi3 = ph / lam;
  } else {
    b.phi2 = ph / lam;
    b.phi3 = geo.h / lam;
  }
  const int d = m.dim();
  const Mat<S> Pi = Mat<S>::Identity(d, d) - m.xi() * m.eta().transpose();
  S worst(0);
  bump(worst, max_abs(Mat<S>(b.phi1 * b.phi1 - Pi)));
  bump(worst, max_abs(Mat<S>(b.phi2 * b.phi2 - Pi)));
  bump(worst, max_abs(Mat<S>(b.phi1 * b.phi2 - b.phi3)));
  bump(worst, max_abs(Mat<S>(b.phi2 * b.phi1 + b.phi3)));
  b.residual = worst;
  return b;
}

template <class S>
Vec<S> second_fundamental_form(const Geometry<S>& geo, const Mat<S>& leaf, const Vec<S>& X, const Vec<S>& Xp) {
  const Mat<S>& G = geo.model.gram();
  Vec<S> w = geo.lc.apply(X, Xp);
  Mat<S> gl = restricted_gram<S>(G, leaf);
  Vec<S> coeffs = solve_linear<S>(gl, Vec<S>(leaf.transpose() * G * w), geo.model.eps);
  return w - leaf * coeffs;
}

template <class S>
GeodesyReport<S> geodesy_umbilicity(const Geometry<S>& geo, const NullityReport<S>& rep) {
  require_off_boundary(rep, "geodesy check");
  const auto& m = geo.model;
  GeodesyReport<S> out;
  out.above = rep.cls == NullityClass::above;
  const S lam = lambda_of(rep);
  auto pos = distribution_basis(
      geo, rep, out.above ? DistributionKind::D_h_pos : DistributionKind::D_phih_pos);
  auto neg = distribution_basis(
      geo, rep, out.above ? DistributionKind::D_h_neg : DistributionKind::D_phih_neg);
  const Vec<S>& xi = m.xi();
  auto g = [&](const Vec<S>& a, const Vec<S>& b) { return m.g(a, b); };
  if (out.above) {
    S worst(0);
    for (int side = 0; side < 2; ++side) {
      const auto& own = side == 0 ? pos.vectors : neg.vectors;
      const auto& other = side == 0 ? neg.vectors : pos.vectors;
      for (const auto& X : own)
        for (const auto& Xp : own) {
          Vec<S> w = geo.lc.apply(X, Xp);
          bump(worst, abs_value<S>(g(w, xi)));
          for (const auto& Y : other) bump(worst, abs_value<S>(g(w, Y)));
        }
    }
    out.geodesic_residual = worst;
    return out;
  }
  S umb(0), cross(0);
  for (int side = 0; side < 2; ++side) {
    const auto& own = side == 0 ? pos : neg;
    const S sigma = side == 0 ? S(1) : S(-1);
    const Mat<S> leaf = own.matrix();
    Vec<S> H = Vec<S>::Zero(m.dim());
    for (const auto& X : own.vectors)
      for (const auto& Xp : own.vectors) {
        Vec<S> B = second_fundamental_form(geo, leaf, X, Xp);
        bump(umb, max_abs(Vec<S>(B + sigma * lam * g(X, Xp) * xi)));
      }
    for (const auto& X : own.vectors) H += second_fundamental_form(geo, leaf, X, X) / g(X, X);
    out.mean_curvature.push_back(H / S(m.n()));
  }
  for (const auto& X : pos.vectors)
    for (const auto& Y : neg.vectors)
      bump(cross, abs_value<S>(S(g(geo.lc.apply(X, Y), xi) + g(X, Vec<S>(m.phi() * Y)))));
  out.umbilic_residual = umb;
  out.cross_residual = cross;
  return out;
}

template <class S>
std::vector<IdentityResult<S>> foliation_identities(const Geometry<S>& geo, const NullityReport<S>& rep) {
  std::vector<IdentityResult<S>> out;
  const auto& m = geo.model;
  const double eps = m.eps;
  const bool para = m.structure.kind == StructureKind::paracontact;
  if (!para) return out;

  if (eigendistributions_involutive(m)) {
    S worst(0);
    for (auto k : {DistributionKind::D_plus, DistributionKind::D_minus}) {
      auto f = pang_invariant(geo, rep, distribution_basis(geo, rep, k));
      bump(worst, f.residual);
    }
    out.push_back(residual_result<S>("invariant1", worst, eps));
  } else {
    out.push_back(not_applicable<S>("invariant1", "eigendistributions of phi are not involutive"));
  }

  const std::vector<std::string> later = {"projectors", "phi_swap", "eigen_parameterization", "pang1", "pang2",
                                          "pang5", "pang6", "libermann", "biparacontact", "curv", "curvatura",
                                          "sectional", "geodesy", "umbilicity"};
  if (!rep.is_nullity || rep.cls == NullityClass::equal) {
    for (const auto& t : later) out.push_back(not_applicable<S>(t, "requires kappa != -1"));
    return out;
  }
  if (!rep.lambda) {
    for (const auto& t : later) out.push_back(not_applicable<S>(t, "sqrt|1+kappa| is irrational"));
    return out;
  }
  const bool above = rep.cls == NullityClass::above;
  auto p = projectors(geo, rep);
  out.push_back(residual_result<S>("projectors", p.algebra_residual, eps));
  {
    auto [Pp, Pm] = phi_projectors(m);
    const Mat<S>& phi = m.phi();
    S worst = max_abs(Mat<S>(phi * p.P_plus - p.P_minus * phi));
    bump(worst, max_abs(Mat<S>(phi * p.P_minus - p.P_plus * phi)));
    // X +- A X / lambda lies in the +-lambda eigendistribution for X in D+ or D-
    S par(0);
    for (const Mat<S>* P : {&Pp, &Pm})
      for (int sgn : {1, -1}) {
        Mat<S> V = *P + S(sgn) * p.A * *P / p.lambda;
        bump(par, max_abs(Mat<S>(p.A * V - S(sgn) * p.lambda * V)));
      }
    out.push_back(residual_result<S>("phi_swap", worst, eps));
    out.push_back(residual_result<S>("eigen_parameterization", par, eps));
  }
  const auto kpos = above ? DistributionKind::D_h_pos : DistributionKind::D_phih_pos;
  const auto kneg = above ? DistributionKind::D_h_neg : DistributionKind::D_phih_neg;
  for (auto k : {DistributionKind::D_h_pos, DistributionKind::D_h_neg, DistributionKind::D_phih_pos,
                 DistributionKind::D_phih_neg}) {
    const bool in_class = k == kpos || k == kneg;
    const char* tag = k == DistributionKind::D_h_pos    ? "pang1"
                      : k == DistributionKind::D_h_neg  ? "pang2"
                      : k == DistributionKind::D_phih_pos ? "pang5"
                                                          : "pang6";
    if (!in_class) {
      out.push_back(not_applicable<S>(tag, above ? "requires kappa < -1" : "requires kappa > -1"));
      continue;
    }
    try {
      auto f = pang_invariant(geo, rep, distribution_basis(geo, rep, k));
      out.push_back(residual_result<S>(tag, f.residual, eps));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotInvolutive) throw;
      IdentityResult<S> r;
      r.tag = tag;
      r.pass = false;
      r.note = e.what();
      out.push_back(r);
    }
  }
  if (above) {
    try {
      auto L = libermann_map(geo, rep);
      S worst = L.square_residual;
      bump(worst, L.kernel_residual);
      bump(worst, L.relation_residual);
      out.push_back(residual_result<S>("libermann", worst, eps));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegeneratePang) throw;
      out.push_back(not_applicable<S>("libermann", e.what()));
    }
  } else {
    out.push_back(not_applicable<S>("libermann", "requires kappa > -1"));
  }
  out.push_back(residual_result<S>("biparacontact", almost_biparacontact(geo, rep).residual, eps));
  auto pb = distribution_basis(geo, rep, kpos);
  auto nb = distribution_basis(geo, rep, kneg);
  auto blocks = curvature_blocks(geo, rep, pb.vectors, nb.vectors);
  if (above) {
    out.push_back(blocks);
    out.push_back(not_applicable<S>("curvatura", "requires kappa < -1"));
  } else {
    out.push_back(not_applicable<S>("curv", "requires kappa > -1"));
    out.push_back(blocks);
  }
  out.push_back(sectional_corollary(geo, rep, pb.vectors, nb.vectors));
  auto geod = geodesy_umbilicity(geo, rep);
  if (above) {
    out.push_back(residual_result<S>("geodesy", geod.geodesic_residual, eps));
    out.push_back(not_applicable<S>("umbilicity", "requires kappa < -1"));
  } else {
    out.push_back(not_applicable<S>("geodesy", "requires kappa > -1"));
    S worst = geod.umbilic_residual;
    bump(worst, geod.cross_residual);
    out.push_back(residual_result<S>("umbilicity", worst, eps));
  }
  return out;
}

#define PARACONTACT_INSTANTIATE(S)                                                                              \
  template struct DistributionBasis<S>;                                                                         \
  template Projectors<S> projectors<S>(const Geometry<S>&, const NullityReport<S>&);                            \
  template std::pair<Mat<S>, Mat<S>> phi_projectors<S>(const Model<S>&);                                        \
  template DistributionBasis<S> distribution_basis<S>(const Geometry<S>&, const NullityReport<S>&,             \
                                                      DistributionKind);                                        \
  template PhiBasis<S> phi_basis<S>(const Geometry<S>&, const NullityReport<S>&);                               \
  template bool is_involutive<S>(const FrameAlgebra<S>&, const std::vector<Vec<S>>&, double);                   \
  template PangForm<S> pang_invariant<S>(const Geometry<S>&, const NullityReport<S>&,                           \
                                         const DistributionBasis<S>&);                                          \
  template LibermannMap<S> libermann_map<S>(const Geometry<S>&, const NullityReport<S>&);                       \
  template DefinitenessReport<S> definiteness<S>(const Geometry<S>&, const NullityReport<S>&);                  \
  template BiParacontact<S> almost_biparacontact<S>(const Geometry<S>&, const NullityReport<S>&);               \
  template Vec<S> second_fundamental_form<S>(const Geometry<S>&, const Mat<S>&, const Vec<S>&, const Vec<S>&);  \
  template GeodesyReport<S> geodesy_umbilicity<S>(const Geometry<S>&, const NullityReport<S>&);                 \
  template std::vector<IdentityResult<S>> foliation_identities<S>(const Geometry<S>&, const NullityReport<S>&);

PARACONTACT_INSTANTIATE(Rational)
PARACONTACT_INSTANTIATE(double)

}  // namespace paracontact
