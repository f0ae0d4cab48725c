#include "paracontact/nullity.hpp"

#include <functional>

namespace paracontact {

const char* class_name(NullityClass c) {
  switch (c) {
    case NullityClass::below: return "below";
    case NullityClass::equal: return "equal";
    case NullityClass::above: return "above";
  }
  return "unknown";
}

namespace {

template <class S>
std::vector<Mat<S>> derivatives(const Connection<S>& conn, const Mat<S>& T) {
  std::vector<Mat<S>> out;
  for (int i = 0; i < conn.dim(); ++i)
    out.push_back(covariant_derivative(conn, T, unit_vector<S>(conn.dim(), i)));
  return out;
}

template <class S>
Mat<S> along(const std::vector<Mat<S>>& D, const Vec<S>& u) {
  Mat<S> out = Mat<S>::Zero(D.front().rows(), D.front().cols());
  for (std::size_t i = 0; i < D.size(); ++i)
    if (u(static_cast<Eigen::Index>(i)) != S(0)) out += u(static_cast<Eigen::Index>(i)) * D[i];
  return out;
}

template <class S>
void require_class(const NullityReport<S>& rep, const char* what) {
  if (!rep.is_nullity) throw Error(ErrorKind::NotNullity, std::string(what) + " needs a (kappa, mu) model");
  if (rep.cls == NullityClass::equal)
    throw Error(ErrorKind::ClassBoundary, std::string(what) + " is undefined for kappa = -1");
}

}  // namespace

template <class S>
NullityReport<S> solve_nullity(const Model<S>& m, const Curvature<S>& R, const Mat<S>& h) {
  const int d = m.dim();
  NullityReport<S> rep;
  rep.kind = m.structure.kind;
  rep.h_zero = is_zero_matrix(h, m.eps);
  const int cols = rep.h_zero ? 1 : 2;
  const int pairs = d * (d - 1) / 2;
  Mat<S> A(pairs * d, cols);
  Vec<S> b(pairs * d);
  int row = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec<S> X = unit_vector<S>(d, i), Y = unit_vector<S>(d, j);
      S ex = m.eta_of(X), ey = m.eta_of(Y);
      A.block(row, 0, d, 1) = ey * X - ex * Y;
      if (!rep.h_zero) A.block(row, 1, d, 1) = ey * (h * X) - ex * (h * Y);
      b.segment(row, d) = R.op(i, j) * m.xi();
      row += d;
    }
  try {
    auto fit = least_squares<S>(A, b, m.eps);
    rep.kappa = fit.x(0);
    if (!rep.h_zero) rep.mu = fit.x(1);
    rep.residual_squared = fit.residual_squared;
    rep.is_nullity = scalar_traits<S>::exact ? fit.residual_squared == S(0) : fit.residual() <= m.eps;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RankDeficient) throw;
    rep.is_nullity = false;
    rep.notes.push_back("nullity system is rank deficient");
    return rep;
  }
  if (rep.h_zero) rep.notes.push_back("h = 0: mu is indeterminate");
  const S one_plus = rep.kappa + S(1);
  if (is_zero(one_plus, m.eps))
    rep.cls = NullityClass::equal;
  else
    rep.cls = one_plus > S(0) ? NullityClass::above : NullityClass::below;
  const S abs_one_plus = abs_value<S>(one_plus);
  rep.lambda_approx = std::sqrt(to_double(abs_one_plus));
  rep.lambda = scalar_traits<S>::sqrt(abs_one_plus);
  if (!rep.lambda)
    rep.notes.push_back("lambda = sqrt|1+kappa| is irrational; lambda-dependent steps run in float mode");
  if (!rep.is_nullity) rep.notes.push_back("structure does not satisfy the nullity condition");
  return rep;
}

template <class S>
S require_lambda(const NullityReport<S>& rep) {
  if (!rep.is_nullity) throw Error(ErrorKind::NotNullity, "no nullity constants");
  if (!rep.lambda) throw Error(ErrorKind::InexactRoot, "sqrt|1+kappa| is not rational");
  return *rep.lambda;
}

template <class S>
std::vector<IdentityResult<S>> identity_suite(const Geometry<S>& geo, const NullityReport<S>& rep) {
  std::vector<IdentityResult<S>> out;
  const auto& m = geo.model;
  if (!rep.is_nullity) {
    out.push_back(not_applicable<S>("nullity", "structure is not a (kappa, mu) structure"));
    return out;
  }
  const int d = m.dim();
  const int n = m.n();
  const double eps = m.eps;
  const auto basis = standard_basis<S>(d);
  const Mat<S>& phi = m.phi();
  const Mat<S>& h = geo.h;
  const Mat<S> ph = phi * h;
  const Vec<S>& xi = m.xi();
  const auto& R = geo.R;
  const S k = rep.kappa;
  const S mu = rep.mu_or_zero();
  const S one(1), two(2);
  const bool para = m.structure.kind == StructureKind::paracontact;
  const bool above = rep.cls == NullityClass::above;
  const bool below = rep.cls == NullityClass::below;
  const bool not_equal = rep.cls != NullityClass::equal;
  const std::string mu_note = rep.mu ? "" : "mu indeterminate; h-terms vanish";
  auto g = [&](const Vec<S>& a, const Vec<S>& b) { return m.g(a, b); };
  auto et = [&](const Vec<S>& a) { return m.eta_of(a); };
  const auto Dphi = derivatives(geo.lc, phi);
  const auto Dh = derivatives(geo.lc, h);
  const auto Dph = derivatives(geo.lc, ph);
  using V = Vec<S>;

  if (!para) {
    out.push_back(check_on_tuples<S, 2>("RXYZETA", basis, eps, [&](const V& X, const V& Y) {
      V rhs = k * (et(Y) * X - et(X) * Y) + mu * (et(Y) * (h * X) - et(X) * (h * Y));
      return V(R.apply(X, Y, xi) - rhs);
    }));
    out.push_back(residual_result<S>("H2_contact", max_abs(Mat<S>(h * h - (k - one) * phi * phi)), eps));
    return out;
  }

  out.push_back(residual_result<S>("H2", max_abs(Mat<S>(h * h - (one + k) * phi * phi)), eps));
  out.push_back(residual_result<S>("Riczeta", max_abs(V(geo.ric.Q * xi - S(2 * n) * k * xi)), eps));
  out.push_back(check_on_tuples<S, 2>(
      "R(X,zeta)Y", basis, eps,
      [&](const V& X, const V& Y) {
        V rhs = k * (g(X, Y) * xi - et(Y) * X) + mu * (g(V(h * X), Y) * xi - et(Y) * (h * X));
        return V(R.apply(xi, X, Y) - rhs);
      },
      mu_note));
  if (not_equal)
    out.push_back(check_on_tuples<S, 2>("NAMLAFI", basis, eps, [&](const V& X, const V& Y) {
      V XmhX = X - h * X;
      V rhs = -g(XmhX, Y) * xi + et(Y) * XmhX;
      return V(along(Dphi, X) * Y - rhs);
    }));
  else
    out.push_back(not_applicable<S>("NAMLAFI", "requires kappa != -1"));
  out.push_back(check_on_tuples<S, 2>(
      "NAMLA_X_H", basis, eps,
      [&](const V& X, const V& Y) {
        V lhs = along(Dh, X) * Y - along(Dh, Y) * X;
        V rhs = -(one + k) * V(two * g(X, V(phi * Y)) * xi + et(X) * (phi * Y) - et(Y) * (phi * X)) +
                (one - mu) * V(et(X) * (ph * Y) - et(Y) * (ph * X));
        return V(lhs - rhs);
      },
      mu_note));
  {
    S r1 = max_abs(Mat<S>(along(Dh, xi) - mu * h * phi));
    S r2 = max_abs(Mat<S>(along(Dph, xi) + mu * h));
    out.push_back(residual_result<S>("NMBLA_ZETAH", r1 > r2 ? r1 : r2, eps, mu_note));
  }
  if (above)
    out.push_back(check_on_tuples<S, 2>("nablah", basis, eps, [&](const V& X, const V& Y) {
      V rhs = -g(X, V(phi * h * h * Y + ph * Y)) * xi + et(Y) * V((one + k) * (phi * X) - ph * X) -
              mu * et(X) * (ph * Y);
      return V(along(Dh, X) * Y - rhs);
    }));
  else
    out.push_back(not_applicable<S>("nablah", "requires kappa > -1"));
  if (not_equal)
    out.push_back(check_on_tuples<S, 2>("nablah1", basis, eps, [&](const V& X, const V& Y) {
      V rhs = -((one + k) * g(X, V(phi * Y)) + g(X, V(ph * Y))) * xi +
              et(Y) * V(ph * V(h * X - X)) - mu * et(X) * (ph * Y);
      return V(along(Dh, X) * Y - rhs);
    }));
  else
    out.push_back(not_applicable<S>("nablah1", "requires kappa != -1"));
  if (below)
    out.push_back(check_on_tuples<S, 2>("formula8", basis, eps, [&](const V& X, const V& Y) {
      V rhs = ((one + k) * (g(X, Y) - et(X) * et(Y)) - g(V(h * X), Y)) * xi + et(Y) * V(h * V(h * X - X)) -
              mu * et(X) * (h * Y);
      return V(along(Dph, X) * Y - rhs);
    }, "xi-coefficient uses g(X,Y) - eta(X)eta(Y)"));
  else
    out.push_back(not_applicable<S>("formula8", "requires kappa < -1"));
  out.push_back(check_on_tuples<S, 2>(
      "formula3", basis, eps,
      [&](const V& X, const V& Y) {
        V lhs = along(Dph, X) * Y - along(Dph, Y) * X;
        V rhs = -(one + k) * V(et(X) * Y - et(Y) * X) + (one - mu) * V(et(X) * (h * Y) - et(Y) * (h * X));
        return V(lhs - rhs);
      },
      mu_note));
  if (not_equal)
    out.push_back(check_on_tuples<S, 3>("RHZ", basis, eps, [&](const V& X, const V& Y, const V& Z) {
      Mat<S> RXY = R.op(X, Y);
      V lhs = RXY * (h * Z) - h * (RXY * Z);
      V rhs = (k * (et(X) * g(V(h * Y), Z) - et(Y) * g(V(h * X), Z)) +
               mu * (one + k) * (et(X) * g(Y, Z) - et(Y) * g(X, Z))) *
                  xi +
              k * V(g(X, V(phi * Z)) * (ph * Y) - g(Y, V(phi * Z)) * (ph * X) + g(Z, V(ph * X)) * (phi * Y) -
                    g(Z, V(ph * Y)) * (phi * X) + et(Z) * V(et(X) * (h * Y) - et(Y) * (h * X))) -
              mu * V((one + k) * et(Z) * V(et(Y) * X - et(X) * Y) + two * g(X, V(phi * Y)) * (ph * Z));
      return V(lhs - rhs);
    }));
  else
    out.push_back(not_applicable<S>("RHZ", "requires kappa != -1"));
  if (below) {
    out.push_back(check_on_tuples<S, 3>(
        "curv1", basis, eps,
        [&](const V& X, const V& Y, const V& Z) {
          Mat<S> RXY = R.op(X, Y);
          V lhs = RXY * (phi * Z) - phi * (RXY * Z);
          auto A = [&](const V& W) { return V((one + k) * (phi * W) + (mu - one) * (ph * W)); };
          V XmhX = X - h * X, YmhY = Y - h * Y;
          V rhs = (et(Y) * g(A(X), Z) - et(X) * g(A(Y), Z)) * xi - et(Y) * et(Z) * A(X) +
                  et(X) * et(Z) * A(Y) + g(YmhY, Z) * (phi * XmhX) - g(XmhX, Z) * (phi * YmhY) -
                  g(V(phi * XmhX), Z) * YmhY + g(V(phi * YmhY), Z) * XmhX;
          return V(lhs - rhs);
        },
        "last term read as (X - hX)"));
    out.push_back(check_on_tuples<S, 3>("curv2", basis, eps, [&](const V& X, const V& Y, const V& Z) {
      Mat<S> RXY = R.op(X, Y);
      V lhs = RXY * (ph * Z) - ph * (RXY * Z);
      auto B = [&](const V& W) { return V((one + two * k) * (phi * W) + (mu - one) * (ph * W)); };
      V hZ = h * Z, W = phi * Z + ph * Z;
      V XmhX = X - h * X, YmhY = Y - h * Y;
      V rhs = (et(Y) * g(B(X), hZ) - et(X) * g(B(Y), hZ)) * xi +
              (g(YmhY, hZ) - mu * (one + k) * et(Y) * et(Z)) * (phi * X) -
              (g(XmhX, hZ) - mu * (one + k) * et(X) * et(Z)) * (phi * Y) -
              (g(YmhY, hZ) + k * et(Y) * et(Z)) * (ph * X) + (g(XmhX, hZ) + k * et(X) * et(Z)) * (ph * Y) -
              (one + k) * g(Y, W) * X + (one + k) * g(X, W) * Y + g(Y, W) * (h * X) - g(X, W) * (h * Y) -
              two * mu * g(X, V(phi * Y)) * hZ;
      return V(lhs - rhs);
    }));
  } else {
    out.push_back(not_applicable<S>("curv1", "requires kappa < -1"));
    out.push_back(not_applicable<S>("curv2", "requires kappa < -1"));
  }
  {
    const Mat<S>& Q = geo.ric.Q;
    const Mat<S> lhs = Q * phi - phi * Q;
    if (is_integrable(geo)) {
      Mat<S> l = jacobi_operator(R, xi);
      Mat<S> rhs = l * phi - phi * l - S(4 * (n - 1)) * ph - V(phi * Q * xi) * m.eta().transpose() +
                   xi * (m.eta().transpose() * Q * phi);
      out.push_back(residual_result<S>("QFI-FIQ", max_abs(Mat<S>(lhs - rhs)), eps));
    } else {
      out.push_back(not_applicable<S>("QFI-FIQ", "requires an integrable structure"));
    }
    Mat<S> kmu = two * (S(2 * (n - 1)) + mu) * h * phi;
    out.push_back(residual_result<S>("KMU_QFI-FIQ", max_abs(Mat<S>(lhs - kmu)), eps, mu_note));
  }
  if (rep.h_zero && rep.cls == NullityClass::equal) {
    out.push_back(check_on_tuples<S, 2>("Pasa", basis, eps, [&](const V& X, const V& Y) {
      return V(R.apply(X, Y, xi) + V(et(Y) * X - et(X) * Y));
    }));
  } else {
    out.push_back(not_applicable<S>("Pasa", "requires h = 0 and kappa = -1"));
  }
  return out;
}

template <class S>
LoweredTensor<S> lower(const Curvature<S>& R) {
  const int d = R.dim();
  LoweredTensor<S> t;
  t.dim = d;
  t.values.reserve(static_cast<std::size_t>(d) * d * d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) t.values.push_back(R.lowered(i, j, k, l));
  return t;
}

template <class S>
LoweredTensor<S> explicit_curvature(const Geometry<S>& geo, const NullityReport<S>& rep) {
  require_class(rep, "explicit curvature");
  const auto& m = geo.model;
  const int d = m.dim();
  const Mat<S>& G = m.gram();
  const Mat<S>& phi = m.phi();
  const Mat<S>& h = geo.h;
  const Mat<S> ph = phi * h;
  const Vec<S>& eta = m.eta();
  const S k = rep.kappa, mu = rep.mu_or_zero();
  const S one(1), two(2);
  const S a = -one + mu / two;
  const S kp1 = k + one;
  const S c = kp1 - mu / two;
  // bilinear forms as matrices: g(A e_i, e_j) = (Aᵀ G)... stored as B(i,j) = g(A e_i, e_j)
  const Mat<S> g = G;
  const Mat<S> gh = h.transpose() * G;
  const Mat<S> gp = phi.transpose() * G;
  const Mat<S> gph = ph.transpose() * G;
  LoweredTensor<S> t;
  t.dim = d;
  t.values.reserve(static_cast<std::size_t>(d) * d * d * d);
  for (int X = 0; X < d; ++X)
    for (int Y = 0; Y < d; ++Y)
      for (int Z = 0; Z < d; ++Z)
        for (int W = 0; W < d; ++W) {
          S v = a * (g(Y, Z) * g(X, W) - g(X, Z) * g(Y, W)) + g(Y, Z) * gh(X, W) - g(X, Z) * gh(Y, W) -
                g(Y, W) * gh(X, Z) + g(X, W) * gh(Y, Z) +
                a / kp1 * (gh(Y, Z) * gh(X, W) - gh(X, Z) * gh(Y, W)) -
                mu / two * (gp(Y, Z) * gp(X, W) - gp(X, Z) * gp(Y, W)) +
                (-k - mu / two) / kp1 * (gph(Y, Z) * gph(X, W) - gph(Y, W) * gph(X, Z)) +
                mu * gp(X, Y) * gp(Z, W) +
                eta(X) * eta(W) * (c * g(Y, Z) + (mu - one) * gh(Y, Z)) -
                eta(X) * eta(Z) * (c * g(Y, W) + (mu - one) * gh(Y, W)) +
                eta(Y) * eta(Z) * (c * g(X, W) + (mu - one) * gh(X, W)) -
                eta(Y) * eta(W) * (c * g(X, Z) + (mu - one) * gh(X, Z));
          t.values.push_back(v);
        }
  return t;
}

template <class S>
S explicit_curvature_residual(const Geometry<S>& geo, const NullityReport<S>& rep) {
  auto f = explicit_curvature(geo, rep);
  auto c = lower(geo.R);
  S worst(0);
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    S r = abs_value<S>(S(f.values[i] - c.values[i]));
    if (r > worst) worst = r;
  }
  return worst;
}

template <class S>
RicciFormula<S> ricci_formula(const Geometry<S>& geo, const NullityReport<S>& rep) {
  require_class(rep, "Ricci formula");
  const auto& m = geo.model;
  const int d = m.dim();
  const int n = m.n();
  const S k = rep.kappa, mu = rep.mu_or_zero();
  const S nn(n);
  const Mat<S> I = Mat<S>::Identity(d, d);
  const Mat<S> ex = m.xi() * m.eta().transpose();
  auto build = [&](const S& coef) {
    return Mat<S>((S(2) * (S(1) - nn) + nn * mu) * I + coef * geo.h +
                  (S(2) * (nn - S(1)) + nn * (S(2) * k - mu)) * ex);
  };
  RicciFormula<S> r;
  r.coefficient_low = S(2) * (nn - S(1)) + mu;
  r.coefficient_high = S(2) * (nn + S(1)) + mu;
  Mat<S> Qlow = build(r.coefficient_low), Qhigh = build(r.coefficient_high);
  r.low_matches = is_zero_matrix(Mat<S>(Qlow - geo.ric.Q), m.eps);
  r.high_matches = is_zero_matrix(Mat<S>(Qhigh - geo.ric.Q), m.eps);
  const bool above = rep.cls == NullityClass::above;
  r.printed_h_coefficient = above ? r.coefficient_low : r.coefficient_high;
  r.Q_formula = above ? Qlow : Qhigh;
  r.eta_einstein = near(mu, S(S(2) * (S(1) - nn)), m.eps);
  if (above)
    r.einstein = is_zero(k, m.eps) && is_zero(mu, m.eps) && n == 1;
  else
    r.einstein = near(k, S((S(1) - nn * nn) / nn), m.eps) && near(mu, S(S(2) * (S(1) - nn)), m.eps);
  return r;
}

template <class S>
IdentityResult<S> curvature_blocks(const Geometry<S>& geo, const NullityReport<S>& rep,
                                   const std::vector<Vec<S>>& xs, const std::vector<Vec<S>>& ys) {
  const bool above = rep.cls == NullityClass::above;
  const std::string tag = above ? "curv" : "curvatura";
  if (!rep.is_nullity || rep.cls == NullityClass::equal)
    return not_applicable<S>(tag, "requires kappa != -1");
  if (!rep.lambda) return not_applicable<S>(tag, "lambda not representable in this scalar mode");
  const auto& m = geo.model;
  const auto& R = geo.R;
  const Mat<S>& phi = m.phi();
  const S k = rep.kappa, mu = rep.mu_or_zero(), lam = *rep.lambda;
  const S one(1), two(2);
  using V = Vec<S>;
  auto g = [&](const V& a, const V& b) { return m.g(a, b); };
  S worst(0);
  auto bump = [&](const V& r) {
    S a = max_abs(r);
    if (a > worst) worst = a;
  };
  for (const auto& X : xs)
    for (const auto& X1 : xs) {
      for (const auto& X2 : xs) {
        V rhs = above ? V((two * (lam - one) + mu) * (g(X1, X2) * X - g(X, X2) * X1))
                      : V((k - one + mu) * (g(X1, X2) * X - g(X, X2) * X1) +
                          lam * (g(X1, X2) * (phi * X) - g(X, X2) * (phi * X1)));
        bump(V(R.apply(X, X1, X2) - rhs));
      }
      for (const auto& Y : ys) {
        V pX = phi * X, pX1 = phi * X1, pY = phi * Y;
        V rhs = above ? V((k + mu) * (-g(pX1, Y) * pX + g(pX, Y) * pX1))
                      : V(-lam * (g(X1, pY) * X - g(X, pY) * X1) - (one - mu) * (g(X1, pY) * pX - g(X, pY) * pX1));
        bump(V(R.apply(X, X1, Y) - rhs));
        // R_{XY} X1
        V rhs2 = above ? V(k * g(pY, X1) * pX - mu * g(pY, X) * pX1)
                       : V(-lam * g(X1, pY) * X - g(X1, pY) * pX - lam * lam * g(X, X1) * Y +
                           lam * g(X, X1) * pY - mu * g(X, pY) * pX1);
        bump(V(R.apply(X, Y, X1) - rhs2));
      }
    }
  for (const auto& Y : ys)
    for (const auto& Y1 : ys) {
      for (const auto& Y2 : ys) {
        V rhs = above ? V((-two * (lam + one) + mu) * (g(Y1, Y2) * Y - g(Y, Y2) * Y1))
                      : V((k - one + mu) * (g(Y1, Y2) * Y - g(Y, Y2) * Y1) -
                          lam * (g(Y1, Y2) * (phi * Y) - g(Y, Y2) * (phi * Y1)));
        bump(V(R.apply(Y, Y1, Y2) - rhs));
      }
      for (const auto& X : xs) {
        V pX = phi * X, pY = phi * Y, pY1 = phi * Y1;
        V rhs = above ? V((k + mu) * (-g(pY1, X) * pY + g(pY, X) * pY1))
                      : V(-lam * (g(X, pY1) * Y - g(X, pY) * Y1) + (one - mu) * (g(X, pY1) * pY - g(X, pY) * pY1));
        bump(V(R.apply(Y, Y1, X) - rhs));
        // R_{XY} Y1
        V rhs2 = above ? V(-k * g(pX, Y1) * pY + mu * g(pX, Y) * pY1)
                       : V(lam * lam * g(Y, Y1) * X + lam * g(Y, Y1) * pX + lam * g(X, pY1) * Y -
                           g(X, pY1) * pY - mu * g(X, pY) * pY1);
        bump(V(R.apply(X, Y, Y1) - rhs2));
      }
    }
  return residual_result<S>(tag, worst, m.eps);
}

template <class S>
IdentityResult<S> sectional_corollary(const Geometry<S>& geo, const NullityReport<S>& rep,
                                      const std::vector<Vec<S>>& xs, const std::vector<Vec<S>>& ys) {
  const std::string tag = "sectional";
  if (!rep.is_nullity || rep.cls == NullityClass::equal)
    return not_applicable<S>(tag, "requires kappa != -1");
  if (!rep.lambda) return not_applicable<S>(tag, "lambda not representable in this scalar mode");
  const auto& m = geo.model;
  const bool above = rep.cls == NullityClass::above;
  const S k = rep.kappa, mu = rep.mu_or_zero(), lam = *rep.lambda;
  const S one(1), two(2);
  using V = Vec<S>;
  auto g = [&](const V& a, const V& b) { return m.g(a, b); };
  S worst(0);
  auto check = [&](const V& a, const V& b, const S& expected) {
    S den = g(a, a) * g(b, b) - g(a, b) * g(a, b);
    if (is_zero(den, m.eps)) return;
    S r = abs_value<S>(S(sectional_curvature(geo.R, a, b, m.eps) - expected));
    if (r > worst) worst = r;
  };
  std::vector<V> all = xs;
  all.insert(all.end(), ys.begin(), ys.end());
  for (const auto& Z : all) {
    if (is_zero(g(Z, Z), m.eps)) continue;
    check(Z, m.xi(), above ? S(k + mu * g(V(geo.h * Z), Z) / g(Z, Z)) : k);
  }
  auto normal = [&](const std::vector<V>& vs, const S& expected) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) check(vs[i], vs[j], expected);
  };
  normal(xs, above ? S(two * (lam - one) + mu) : S(k - one + mu));
  normal(ys, above ? S(-two * (lam + one) + mu) : S(k - one + mu));
  for (const auto& X : xs)
    for (const auto& Y : ys) {
      S gxx = g(X, X), gyy = g(Y, Y);
      if (is_zero(S(gxx * gyy), m.eps)) continue;
      S t = g(X, V(m.phi() * Y));
      S ratio = t * t / (gxx * gyy);
      check(X, Y, above ? S((k - mu) * ratio) : S(lam * lam - (mu + one) * ratio));
    }
  return residual_result<S>(tag, worst, m.eps);
}

#define PARACONTACT_INSTANTIATE(S)                                                                       \
  template NullityReport<S> solve_nullity<S>(const Model<S>&, const Curvature<S>&, const Mat<S>&);       \
  template S require_lambda<S>(const NullityReport<S>&);                                                 \
  template std::vector<IdentityResult<S>> identity_suite<S>(const Geometry<S>&, const NullityReport<S>&); \
  template LoweredTensor<S> explicit_curvature<S>(const Geometry<S>&, const NullityReport<S>&);          \
  template LoweredTensor<S> lower<S>(const Curvature<S>&);                                               \
  template S explicit_curvature_residual<S>(const Geometry<S>&, const NullityReport<S>&);                \
  template RicciFormula<S> ricci_formula<S>(const Geometry<S>&, const NullityReport<S>&);                \
  template IdentityResult<S> curvature_blocks<S>(const Geometry<S>&, const NullityReport<S>&,            \
                                                 const std::vector<Vec<S>>&, const std::vector<Vec<S>>&); \
  template IdentityResult<S> sectional_corollary<S>(const Geometry<S>&, const NullityReport<S>&,         \
                                                    const std::vector<Vec<S>>&, const std::vector<Vec<S>>&);

PARACONTACT_INSTANTIATE(Rational)
PARACONTACT_INSTANTIATE(double)

}  // namespace paracontact
