#ifndef GK_LIE_GROUP_HPP
#define GK_LIE_GROUP_HPP

#include <string>
#include <vector>
#include <Eigen/Dense>

#include "gk/jet.hpp"
#include "gk/sampler.hpp"

namespace gk {

enum class GroupFamily { Unitary, SpecialOrthogonal, SpecialUnitary };

// A compact matrix group together with a basis of its Lie algebra, the
// structure constants in that basis, and an Ad-invariant inner product.
//
// Complex groups are stored realified (2m x 2m real matrices commuting with
// the realified i), so every group element here is a real orthogonal matrix
// and inverses are plain transposes. Algebra elements are coefficient
// vectors in the stored basis.
class LieGroup {
 public:
  static LieGroup circle();                     // U(1), realified to 2x2
  static LieGroup special_orthogonal(int n);    // SO(n)
  static LieGroup special_unitary2();           // SU(2), realified to 4x4

  GroupFamily family() const { return family_; }
  const std::string& name() const { return name_; }
  int matrix_size() const { return m_; }
  int algebra_dim() const { return d_; }
  bool abelian() const { return d_ == 1; }

  const Eigen::MatrixXd& basis(int i) const { return basis_[i]; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  // matrix of ad_{E_i} acting on coefficient vectors
  const Eigen::MatrixXd& ad_basis(int i) const { return ad_basis_[i]; }
  Eigen::MatrixXd identity() const { return Eigen::MatrixXd::Identity(m_, m_); }

  Eigen::MatrixXd algebra_matrix(const Eigen::VectorXd& a) const;
  JMat algebra_matrix(const JVec& a) const;

  // Frobenius least-squares coefficients of m in the basis; *residual (if
  // given) receives the off-span norm.
  Eigen::VectorXd project(const Eigen::MatrixXd& m, double* residual = nullptr) const;
  JVec project(const JMat& m) const;

  // group exponential of the algebra element with the given coefficients
  Eigen::MatrixXd exp(const Eigen::VectorXd& a) const;
  // inverse of exp near the identity (||k - I||_F < 1); internal plumbing
  Eigen::VectorXd log(const Eigen::MatrixXd& k) const;

  // Ad_k a = coefficients of k (sum a_i E_i) k^{-1}
  Eigen::VectorXd adjoint(const Eigen::MatrixXd& k, const Eigen::VectorXd& a) const;
  JVec adjoint(const JMat& k, const JVec& a) const;

  Eigen::VectorXd bracket(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  JVec bracket(const JVec& a, const JVec& b) const;

  double inner(const Eigen::VectorXd& a, const Eigen::VectorXd& b) const;
  D2 inner(const JVec& a, const JVec& b) const;
  double norm(const Eigen::VectorXd& a) const { return std::sqrt(inner(a, a)); }

  // ||k^T k - I||_F plus the family-specific defining constraints
  double group_constraint_residual(const Eigen::MatrixXd& k) const;
  // skewness plus family constraints of an algebra representative
  double algebra_constraint_residual(const Eigen::MatrixXd& e) const;

  Eigen::VectorXd random_algebra_element(Sampler& rng, double scale = 1.0) const;
  Eigen::MatrixXd random_group_element(Sampler& rng, double scale = 1.5) const;

  // Finite subset of K whose adjoint action averages to the projection onto
  // the Ad-invariant part of the algebra (identically zero for the
  // semisimple families, the identity map for abelian ones).
  const std::vector<Eigen::MatrixXd>& averaging_set() const { return averaging_set_; }

 private:
  LieGroup() = default;
  void finalize();  // derive gram, ad matrices, projection factors

  GroupFamily family_{};
  std::string name_;
  int m_ = 0;        // real matrix size
  int mc_ = 0;       // complex size when realified, else 0
  int d_ = 0;        // algebra dimension
  std::vector<Eigen::MatrixXd> basis_;
  Eigen::MatrixXd gram_;
  std::vector<Eigen::MatrixXd> ad_basis_;
  Eigen::MatrixXd frob_gram_inv_;  // inverse Gram of the basis in Frobenius metric
  std::vector<Eigen::MatrixXd> averaging_set_;
};

}  // namespace gk

#endif  // GK_LIE_GROUP_HPP
