#pragma once

// Generalized Cartan matrices, simply connected root data, finite/affine
// recognition and foldings onto symmetric data.
//
// Convention: a(i, j) = <alpha_i^vee, alpha_j>, so the simple reflection s_i
// sends alpha_j to alpha_j - a(i, j) alpha_i.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tnnflag {

using IntMatrix = std::vector<std::vector<int>>;

/// Symmetrizable generalized Cartan matrix with a positive symmetrizer d
/// satisfying d_i a_ij = d_j a_ji.
class GCM {
 public:
  /// Validates the matrix and derives the minimal integer symmetrizer.
  explicit GCM(IntMatrix a);
  /// Validates the matrix and checks the supplied symmetrizer.
  GCM(IntMatrix a, std::vector<int> symmetrizer);

  int rank() const { return static_cast<int>(a_.size()); }
  int operator()(int i, int j) const { return a_[i][j]; }
  const IntMatrix& entries() const { return a_; }
  const std::vector<int>& symmetrizer() const { return d_; }
  bool symmetric() const;

  friend bool operator==(const GCM& x, const GCM& y) { return x.a_ == y.a_; }

 private:
  IntMatrix a_;
  std::vector<int> d_;
};

/// Order of s_i s_j; std::nullopt stands for infinity. Throws DomainError
/// when i == j.
std::optional<int> m_value(const GCM& a, int i, int j);

struct Classification {
  enum class Kind { Finite, Affine, Indefinite };
  Kind kind;
  /// Type name such as "A_2", "C_3", "A_1^(1)", or a product "A_1xA_1";
  /// empty for indefinite matrices and unrecognized shapes.
  std::string name;
};

/// Finite iff the symmetrized matrix is positive definite; affine iff it is
/// positive semidefinite with one-dimensional kernel. Exact arithmetic.
Classification classify(const GCM& a);

/// Canonical (Bourbaki) Cartan matrix for a type name. Accepted spellings:
/// "A3", "A_3", "E6", "A1~", "A1^(1)", "A_1^{(1)}".
GCM named_gcm(std::string_view name);

/// Connected components of the Dynkin diagram, each sorted.
std::vector<std::vector<int>> components(const GCM& a);

/// Permutation p with a(p[i], p[j]) == b(i, j) for all i, j, if any.
std::optional<std::vector<int>> find_isomorphism(const GCM& a, const GCM& b);

/// Simply connected Kac-Moody root datum. Nodes are indexed 0..rank-1
/// internally and carry display labels (1..n for finite types, 0..n for
/// affine types with 0 the affine node).
class RootDatum {
 public:
  static std::shared_ptr<const RootDatum> make(GCM gcm, std::vector<int> labels = {},
                                               std::string name = {});
  static std::shared_ptr<const RootDatum> named(std::string_view type);

  const GCM& gcm() const { return gcm_; }
  int rank() const { return gcm_.rank(); }
  int a(int i, int j) const { return gcm_(i, j); }
  const std::string& name() const { return name_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
  /// Throws InputError for an unknown label.
  int index_of(int label) const;

  /// True when both describe the same Cartan matrix.
  bool same_as(const RootDatum& o) const { return this == &o || gcm_ == o.gcm_; }

  /// Opaque per-datum memo storage used by the Weyl group code.
  std::shared_ptr<void> cache_slot(const std::string& key,
                                   std::shared_ptr<void> (*create)()) const;

 private:
  RootDatum(GCM gcm, std::vector<int> labels, std::string name)
      : gcm_(std::move(gcm)), labels_(std::move(labels)), name_(std::move(name)) {}
  GCM gcm_;
  std::vector<int> labels_;
  std::string name_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::pair<std::string, std::shared_ptr<void>>> caches_;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

/// Folding of a datum onto a symmetric ambient datum along an admissible
/// automorphism sigma. Node i of the folded datum corresponds to the sigma
/// orbit orbits[i] of ambient nodes.
struct FoldingData {
  DatumPtr ambient;
  std::vector<int> sigma;                // ambient node -> ambient node
  std::vector<std::vector<int>> orbits;  // folded node -> ambient nodes (sorted)
  std::vector<int> orbit_of;             // ambient node -> folded node

  bool is_identity() const;
};

/// a_ij = sum_{p in orbit i} ambient(p, q) for any q in orbit j.
GCM fold_gcm(const GCM& ambient, const std::vector<std::vector<int>>& orbits);

/// Identity folding for symmetric input; otherwise the tabled ambient datum
/// (C_n <- A_{2n-1}, B_n <- D_{n+1}, F_4 <- E_6, G_2 <- D_4 and the
/// untwisted affine analogues). Throws UnsupportedFolding otherwise.
FoldingData build_folding(const DatumPtr& datum);

/// Checks sigma preserves the ambient matrix, orbit members are pairwise
/// non-adjacent, and the fold reproduces `folded`. Throws UnsupportedFolding
/// naming the first violated condition.
void validate_folding(const FoldingData& f, const GCM& folded);

}  // namespace tnnflag
