#pragma once

// Independent reference models used by the tests: dense rational matrices
// built from elementary matrices, the symmetric group as permutations, the
// infinite dihedral group, subword and subexpression brute force, and
// weights in the fundamental-weight basis.

#include <vector>

#include "tnnflag/flag.hpp"
#include "tnnflag/random.hpp"

namespace oracle {

using tnnflag::Rational;
using QMat = std::vector<std::vector<Rational>>;

QMat identity(int n);
QMat mul(const QMat& a, const QMat& b);
/// e + a E_{i,i+1}, e + a E_{i+1,i}, diag(.., b, 1/b, ..) in SL_n.
QMat elem_x(int n, int i, const Rational& a);
QMat elem_y(int n, int i, const Rational& a);
QMat elem_torus(int n, int i, const Rational& b);
int rank(QMat m);

/// x letters, torus and y letters of a type A_n element over Q_{>0}, built
/// from elementary matrices of size n + 1.
QMat g_matrix(const tnnflag::GElement& g);
QMat to_qmat(const tnnflag::Matrix<Rational>& m);

// Symmetric group S_n as arrays: w s_i swaps entries i and i + 1.
using Perm = std::vector<int>;
Perm perm_of_word(int n, const tnnflag::Word& word);
tnnflag::Word word_of_perm(Perm p);
int inversions(const Perm& p);
/// Tableau criterion.
bool perm_bruhat_leq(const Perm& v, const Perm& w);
std::vector<Perm> all_perms(int n);
Perm perm_mul(const Perm& a, const Perm& b);

/// B+ w B+ and B- v B+ membership from rank profiles of southwest and
/// northwest submatrices, by search over S_n.
Perm w_by_rank(const QMat& g);
Perm v_by_rank(const QMat& g);

/// Some subword of the word has product v.
bool subword_leq(const tnnflag::WeylElement& v, const tnnflag::Word& reduced_word_of_w);

/// Every sequence v_(0..n) with v_(j) in {v_(j-1), v_(j-1) s_{i_j}}.
std::vector<std::vector<tnnflag::WeylElement>> all_subexpressions(const tnnflag::DatumPtr& d,
                                                                  const tnnflag::Word& word);

/// Infinite dihedral group on letters 0, 1: elements are alternating words.
struct Dihedral {
  std::vector<int> word;
  friend bool operator==(const Dihedral&, const Dihedral&) = default;
};
Dihedral dihedral_times(const Dihedral& w, int i);  // w s_i
Dihedral dihedral_simple_times(int i, const Dihedral& w);
std::vector<Dihedral> dihedral_up_to(int max_length);
bool dihedral_leq(const Dihedral& v, const Dihedral& w);
/// s_i * w and s_i o_l w folded over a word of u, right to left.
Dihedral dihedral_star(const Dihedral& u, const Dihedral& w);
Dihedral dihedral_circ(const Dihedral& u, const Dihedral& w);

/// Fundamental-weight coordinates: (s_i l)_q = l_q - l_i a(q, i).
std::vector<long> reflect_weight(const tnnflag::GCM& a, int i, std::vector<long> l);

}  // namespace oracle
