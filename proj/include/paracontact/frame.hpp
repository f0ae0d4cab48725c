#ifndef PARACONTACT_FRAME_HPP
#define PARACONTACT_FRAME_HPP

#include <map>
#include <string>
#include <vector>

#include "paracontact/errors.hpp"
#include "paracontact/scalar.hpp"

namespace paracontact {

// Lie algebra in a fixed basis: [e_i, e_j] = sum_k c(k, i, j) e_k.
template <class S>
class FrameAlgebra {
 public:
  FrameAlgebra() = default;
  FrameAlgebra(int dim, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const S& c(int k, int i, int j) const { return c_[index(k, i, j)]; }
  // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(int i, int j, const Vec<S>& v);
  Vec<S> bracket(int i, int j) const;
  Vec<S> bracket(const Vec<S>& u, const Vec<S>& v) const;
  // ad(u): column j is [u, e_j].
  Mat<S> ad(const Vec<S>& u) const;
  Mat<S> ad(int i) const { return ad(unit_vector<S>(dim_, i)); }

 private:
  std::size_t index(int k, int i, int j) const {
    return (static_cast<std::size_t>(k) * dim_ + i) * dim_ + j;
  }
  int dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<S> c_;
};

template <class S>
struct JacobiViolationEntry {
  int i, j, k, l;
  S residual;
};

// Jacobi sum for every (i,j,k) and output component l; returns the nonzero ones.
template <class S>
std::vector<JacobiViolationEntry<S>> validate_jacobi(const FrameAlgebra<S>& a,
                                                     double eps = kDefaultEps);

enum class StructureKind { paracontact, contact };

const char* kind_name(StructureKind kind);

template <class S>
struct Structure {
  StructureKind kind = StructureKind::paracontact;
  Mat<S> phi;
  Vec<S> xi;
  Mat<S> gram;
  Vec<S> eta;
  int n = 0;
};

template <class S>
struct Model {
  FrameAlgebra<S> algebra;
  Structure<S> structure;
  std::string name;
  std::map<std::string, std::string> params;
  double eps = kDefaultEps;

  int dim() const { return algebra.dim(); }
  int n() const { return structure.n; }
  const Mat<S>& phi() const { return structure.phi; }
  const Vec<S>& xi() const { return structure.xi; }
  const Mat<S>& gram() const { return structure.gram; }
  const Vec<S>& eta() const { return structure.eta; }
  S g(const Vec<S>& u, const Vec<S>& v) const { return u.dot(structure.gram * v); }
  S eta_of(const Vec<S>& u) const { return structure.eta.dot(u); }
  // I - eta ⊗ xi
  Mat<S> pi() const {
    return Mat<S>::Identity(dim(), dim()) - structure.xi * structure.eta.transpose();
  }
};

// Assembles and checks a model: dimensions, odd dimension, Jacobi. eta defaults to gram * xi.
template <class S>
Model<S> make_model(FrameAlgebra<S> algebra, StructureKind kind, Mat<S> phi, Vec<S> xi, Mat<S> gram,
                    std::optional<Vec<S>> eta = std::nullopt, std::string name = {},
                    double eps = kDefaultEps);

// "fix-a" (params alpha, beta), "fix-b" (alpha, beta; default 1, 1), "fix-c".
template <class S>
Model<S> builtin_example(const std::string& name, const std::vector<S>& params);

std::vector<std::string> builtin_example_names();

template <class To, class From>
Model<To> convert_model(const Model<From>& m);

}  // namespace paracontact

#endif
