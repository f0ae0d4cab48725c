#include "paracontact/connection.hpp"

namespace paracontact {

namespace {

template <class S>
void require_zero(const S& residual, double eps, const std::string& what) {
  if (!is_zero(residual, eps))
    throw Error(ErrorKind::PostconditionFailed, what + " (residual " + to_string(residual) + ")");
}

// Linear combination sum_i u_i D[i] of per-direction operators.
template <class S>
Mat<S> along(const std::vector<Mat<S>>& D, const Vec<S>& u) {
  Mat<S> out = Mat<S>::Zero(D.front().rows(), D.front().cols());
  for (std::size_t i = 0; i < D.size(); ++i)
    if (u(static_cast<Eigen::Index>(i)) != S(0)) out += u(static_cast<Eigen::Index>(i)) * D[i];
  return out;
}

template <class S>
std::vector<Mat<S>> derivatives(const Connection<S>& conn, const Mat<S>& T) {
  std::vector<Mat<S>> out;
  for (int i = 0; i < conn.dim(); ++i)
    out.push_back(covariant_derivative(conn, T, unit_vector<S>(conn.dim(), i)));
  return out;
}

}  // namespace

template <class S>
Connection<S> levi_civita(const Model<S>& m) {
  const int d = m.dim();
  const Mat<S>& G = m.gram();
  const Mat<S> Ginv = inverse<S>(G, m.eps);
  const auto& a = m.algebra;
  Connection<S> conn;
  conn.kind = ConnectionKind::levi_civita;
  // GB[i][j] = G [e_i, e_j]
  std::vector<std::vector<Vec<S>>> GB(d, std::vector<Vec<S>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) GB[i][j] = G * a.bracket(i, j);
  for (int i = 0; i < d; ++i) {
    Mat<S> low(d, d);  // low(k, j) = g(nabla_{e_i} e_j, e_k)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) low(k, j) = (GB[i][j](k) - GB[j][k](i) + GB[k][i](j)) / S(2);
    conn.nabla.push_back(Ginv * low);
  }
  for (int i = 0; i < d; ++i) {
    require_zero<S>(max_abs(Mat<S>(G * conn.nabla[i] + conn.nabla[i].transpose() * G)), m.eps,
                    "Levi-Civita connection is not metric");
    for (int j = 0; j < d; ++j)
      require_zero<S>(max_abs(Vec<S>(conn.nabla[i].col(j) - conn.nabla[j].col(i) - a.bracket(i, j))),
                      m.eps, "Levi-Civita connection has torsion");
  }
  return conn;
}

template <class S>
std::vector<S> nabla_xi_check(const Model<S>& m, const Connection<S>& lc, const Mat<S>& h) {
  const Mat<S>& phi = m.phi();
  const bool para = m.structure.kind == StructureKind::paracontact;
  const Mat<S> expected = para ? Mat<S>(-phi + phi * h) : Mat<S>(-phi - phi * h);
  std::vector<S> out;
  for (int i = 0; i < m.dim(); ++i)
    out.push_back(max_abs(Vec<S>(lc.nabla[i] * m.xi() - expected.col(i))));
  return out;
}

template <class S>
Connection<S> canonical_paracontact_connection(const Model<S>& m, const Connection<S>& lc,
                                               const Mat<S>& h) {
  const int d = m.dim();
  const Mat<S>& phi = m.phi();
  const Mat<S>& G = m.gram();
  const Vec<S>& xi = m.xi();
  const Vec<S>& eta = m.eta();
  const Mat<S> I = Mat<S>::Identity(d, d);
  Connection<S> pc;
  pc.kind = ConnectionKind::paracontact_canonical;
  for (int i = 0; i < d; ++i) {
    Vec<S> X = unit_vector<S>(d, i);
    Vec<S> XmhX = X - h * X;
    Mat<S> N = lc.nabla[i] + eta(i) * phi + Vec<S>(phi * X - phi * h * X) * eta.transpose() +
               xi * (XmhX.transpose() * G * phi);
    pc.nabla.push_back(std::move(N));
  }
  const Mat<S> deta = exterior_derivative_eta(m);
  const Mat<S> Pi = m.pi();
  auto torsion = [&](const Vec<S>& X, const Vec<S>& Y) {
    return Vec<S>(pc.apply(X, Y) - pc.apply(Y, X) - m.algebra.bracket(X, Y));
  };
  for (int i = 0; i < d; ++i) {
    const Mat<S>& N = pc.nabla[i];
    require_zero<S>(max_abs(Vec<S>(N.transpose() * eta)), m.eps, "nabla^pc eta != 0");
    require_zero<S>(max_abs(Vec<S>(N * xi)), m.eps, "nabla^pc xi != 0");
    require_zero<S>(max_abs(Mat<S>(G * N + N.transpose() * G)), m.eps, "nabla^pc g != 0");
    Vec<S> X = unit_vector<S>(d, i);
    Mat<S> lhs = covariant_derivative(pc, phi, X);
    Mat<S> rhs = covariant_derivative(lc, phi, X) + xi * (Vec<S>(X - h * X).transpose() * G) -
                 Vec<S>(X - h * X) * eta.transpose();
    require_zero<S>(max_abs(Mat<S>(lhs - rhs)), m.eps, "nabla^pc phi differs from its expression");
    Vec<S> Y = unit_vector<S>(d, i);
    require_zero<S>(max_abs(Vec<S>(torsion(xi, phi * Y) + phi * torsion(xi, Y))), m.eps,
                    "T^pc(xi, phi Y) != -phi T^pc(xi, Y)");
    for (int j = 0; j < d; ++j) {
      Vec<S> U = Pi.col(i), V = Pi.col(j);
      require_zero<S>(max_abs(Vec<S>(torsion(U, V) - S(2) * U.dot(deta * V) * xi)), m.eps,
                      "T^pc(X, Y) != 2 deta(X, Y) xi on D");
    }
  }
  return pc;
}

template <class S>
CurvatureSymmetries<S> curvature_symmetries(const Curvature<S>& R) {
  const int d = R.dim();
  CurvatureSymmetries<S> s{S(0), S(0), S(0), S(0)};
  auto bump = [](S& acc, const S& v) {
    S a = abs_value<S>(v);
    if (a > acc) acc = a;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          S r = R.lowered(i, j, k, l);
          bump(s.antisym_first, r + R.lowered(j, i, k, l));
          bump(s.antisym_second, r + R.lowered(i, j, l, k));
          bump(s.pair_symmetry, r - R.lowered(k, l, i, j));
        }
        Vec<S> cyc = R.op(i, j).col(k) + R.op(j, k).col(i) + R.op(k, i).col(j);
        bump(s.bianchi, max_abs(cyc));
      }
  return s;
}

template <class S>
Curvature<S> curvature(const Connection<S>& conn, const FrameAlgebra<S>& a, const Mat<S>& gram,
                       double eps) {
  const int d = conn.dim();
  Curvature<S> R;
  R.gram = gram;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Mat<S>& Ni = conn.nabla[i];
      const Mat<S>& Nj = conn.nabla[j];
      R.ops.push_back(Mat<S>(Ni * Nj - Nj * Ni - conn.along(a.bracket(i, j))));
    }
  if (conn.kind == ConnectionKind::levi_civita) {
    auto s = curvature_symmetries(R);
    require_zero<S>(s.antisym_first, eps, "curvature not antisymmetric in the first pair");
    require_zero<S>(s.antisym_second, eps, "curvature not antisymmetric in the second pair");
    require_zero<S>(s.pair_symmetry, eps, "curvature lacks pair symmetry");
    require_zero<S>(s.bianchi, eps, "first Bianchi identity fails");
  }
  return R;
}

template <class S>
Ricci<S> ricci(const Curvature<S>& R, double eps) {
  const int d = R.dim();
  Ricci<S> out;
  out.ric = Mat<S>::Zero(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      for (int i = 0; i < d; ++i) out.ric(j, k) += R.op(i, j)(i, k);
  out.Q = inverse<S>(R.gram, eps) * out.ric;
  out.scalar = out.Q.trace();
  return out;
}

template <class S>
Mat<S> ricci_via_frame(const Curvature<S>& R, double eps) {
  const int d = R.dim();
  const Mat<S> B = orthogonal_basis<S>(R.gram, Mat<S>(Mat<S>::Identity(d, d)), eps);
  if (B.cols() != d) throw Error(ErrorKind::SingularMatrix, "degenerate metric has no orthogonal frame");
  Mat<S> ric = Mat<S>::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    Vec<S> v = B.col(a);
    S vv = v.dot(R.gram * v);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        ric(j, k) += R.lowered(v, unit_vector<S>(d, j), unit_vector<S>(d, k), v) / vv;
  }
  return ric;
}

template <class S>
Mat<S> jacobi_operator(const Curvature<S>& R, const Vec<S>& xi) {
  const int d = R.dim();
  Mat<S> out(d, d);
  for (int j = 0; j < d; ++j) out.col(j) = R.apply(unit_vector<S>(d, j), xi, xi);
  return out;
}

template <class S>
S sectional_curvature(const Curvature<S>& R, const Vec<S>& X, const Vec<S>& Y, double eps) {
  const Mat<S>& G = R.gram;
  S den = X.dot(G * X) * Y.dot(G * Y) - X.dot(G * Y) * X.dot(G * Y);
  if (is_zero(den, eps)) throw Error(ErrorKind::DegeneratePlane, "plane is degenerate for the metric");
  return R.lowered(X, Y, Y, X) / den;
}

template <class S>
Geometry<S> compute_geometry(const Model<S>& m) {
  Geometry<S> g;
  g.model = m;
  g.deta = exterior_derivative_eta(m);
  g.h = compute_h(m);
  g.lc = levi_civita(m);
  g.R = curvature(g.lc, m.algebra, m.gram(), m.eps);
  g.ric = ricci(g.R, m.eps);
  return g;
}

template <class S>
bool is_integrable(const Geometry<S>& geo) {
  const auto& m = geo.model;
  if (m.structure.kind != StructureKind::paracontact) return false;
  auto pc = canonical_paracontact_connection(m, geo.lc, geo.h);
  for (int i = 0; i < m.dim(); ++i)
    if (!is_zero_matrix(covariant_derivative(pc, m.phi(), unit_vector<S>(m.dim(), i)), m.eps))
      return false;
  return true;
}

template <class S>
bool eigendistributions_involutive(const Model<S>& m) {
  const Mat<S> Pi = m.pi();
  for (int sign : {1, -1}) {
    const Mat<S> P = (Pi + S(sign) * m.phi()) / S(2);
    const Mat<S> Q = Mat<S>::Identity(m.dim(), m.dim()) - P;
    for (int i = 0; i < m.dim(); ++i)
      for (int j = i + 1; j < m.dim(); ++j)
        if (!is_zero_matrix(Vec<S>(Q * m.algebra.bracket(P.col(i), P.col(j))), m.eps)) return false;
  }
  return true;
}

template <class S>
std::vector<IdentityResult<S>> general_identities(const Geometry<S>& geo) {
  const auto& m = geo.model;
  const int d = m.dim();
  const double eps = m.eps;
  const auto basis = standard_basis<S>(d);
  std::vector<IdentityResult<S>> out;
  {
    auto res = nabla_xi_check(m, geo.lc, geo.h);
    S worst(0);
    for (const auto& r : res)
      if (r > worst) worst = r;
    out.push_back(residual_result<S>("nablaxi", worst, eps));
  }
  if (m.structure.kind != StructureKind::paracontact) return out;

  const Mat<S>& phi = m.phi();
  const Mat<S>& h = geo.h;
  const Mat<S> ph = phi * h;
  const Vec<S>& xi = m.xi();
  const auto& R = geo.R;
  const auto Dphi = derivatives(geo.lc, phi);
  const auto Dph = derivatives(geo.lc, ph);
  auto g = [&](const Vec<S>& a, const Vec<S>& b) { return m.g(a, b); };
  auto et = [&](const Vec<S>& a) { return m.eta_of(a); };

  out.push_back(check_on_tuples<S, 2>("namlafibar", basis, eps, [&](const Vec<S>& X, const Vec<S>& Y) {
    Vec<S> lhs = along(Dphi, Vec<S>(phi * X)) * (phi * Y) - along(Dphi, X) * Y;
    Vec<S> rhs = S(2) * g(X, Y) * xi - et(Y) * Vec<S>(X - h * X + et(X) * xi);
    return Vec<S>(lhs - rhs);
  }));
  out.push_back(check_on_tuples<S, 1>("FiL", basis, eps, [&](const Vec<S>& X) {
    Vec<S> lhs = R.apply(xi, X, xi) + phi * R.apply(xi, Vec<S>(phi * X), xi);
    return Vec<S>(lhs - S(2) * Vec<S>(phi * phi * X - h * h * X));
  }));
  out.push_back(check_on_tuples<S, 3>(
      "Curvature2", basis, eps, [&](const Vec<S>& X, const Vec<S>& Y, const Vec<S>& Z) {
        S rhs = -g(Y, along(Dphi, X) * Z) + g(X, along(Dph, Y) * Z) - g(X, along(Dph, Z) * Y);
        return S(R.lowered(xi, X, Y, Z) - rhs);
      }));
  out.push_back(check_on_tuples<S, 3>(
      "Curvature3", basis, eps,
      [&](const Vec<S>& X, const Vec<S>& Y, const Vec<S>& Z) {
        Vec<S> pX = phi * X, pY = phi * Y, pZ = phi * Z, hX = h * X;
        S lhs = R.lowered(xi, X, Y, Z) + R.lowered(xi, X, pY, pZ) - R.lowered(xi, pX, pY, Z) -
                R.lowered(xi, pX, Y, pZ);
        // (nabla_W Phi)(Y, Z) = g(Y, (nabla_W phi) Z)
        S dPhi = g(Y, along(Dphi, hX) * Z);
        S rhs = S(-2) * dPhi + S(2) * et(Y) * g(Vec<S>(X - hX), Z) - S(2) * et(Z) * g(Vec<S>(X - hX), Y);
        return S(lhs - rhs);
      },
      "(nabla_W Phi)(Y,Z) = g(Y, (nabla_W phi) Z)"));
  out.push_back(check_on_tuples<S, 2>("CURVATURE_4", basis, eps, [&](const Vec<S>& X, const Vec<S>& Y) {
    Vec<S> rhs = -along(Dphi, X) * Y + along(Dphi, Y) * X + along(Dph, X) * Y - along(Dph, Y) * X;
    return Vec<S>(R.apply(X, Y, xi) - rhs);
  }));
  return out;
}

#define PARACONTACT_INSTANTIATE(S)                                                                  \
  template Connection<S> levi_civita<S>(const Model<S>&);                                           \
  template std::vector<S> nabla_xi_check<S>(const Model<S>&, const Connection<S>&, const Mat<S>&);  \
  template Connection<S> canonical_paracontact_connection<S>(const Model<S>&, const Connection<S>&, \
                                                             const Mat<S>&);                        \
  template CurvatureSymmetries<S> curvature_symmetries<S>(const Curvature<S>&);                     \
  template Curvature<S> curvature<S>(const Connection<S>&, const FrameAlgebra<S>&, const Mat<S>&,   \
                                     double);                                                       \
  template Ricci<S> ricci<S>(const Curvature<S>&, double);                                          \
  template Mat<S> ricci_via_frame<S>(const Curvature<S>&, double);                                  \
  template Mat<S> jacobi_operator<S>(const Curvature<S>&, const Vec<S>&);                           \
  template S sectional_curvature<S>(const Curvature<S>&, const Vec<S>&, const Vec<S>&, double);     \
  template Geometry<S> compute_geometry<S>(const Model<S>&);                                        \
  template bool is_integrable<S>(const Geometry<S>&);                                               \
  template bool eigendistributions_involutive<S>(const Model<S>&);                                  \
  template std::vector<IdentityResult<S>> general_identities<S>(const Geometry<S>&);

PARACONTACT_INSTANTIATE(Rational)
PARACONTACT_INSTANTIATE(double)

}  // namespace paracontact
