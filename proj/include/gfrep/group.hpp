#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfrep/errors.hpp"

namespace gfrep {

// Fully enumerated finite group: multiplication table, inverse table,
// identity at index 0, and for every element a word in the chosen
// generators. Desk scale (|G| bounded); immutable once built.
class Group {
 public:
  Group() = default;  // empty placeholder; assign from a factory before use
  static Group from_permutations(const std::vector<std::vector<int>>& gens,
                                 int closure_bound = 10000);
  static Group from_mult_table(std::vector<int32_t> table,
                               std::vector<int> gens,
                               std::vector<std::string> gen_names);
  static Group trivial();

  int order() const { return n_; }
  int mult(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  int identity() const { return 0; }
  // x h x^-1
  int conj(int x, int h) const { return mult(mult(x, h), inverse(x)); }

  const std::vector<int>& generators() const { return gens_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  // Word of element e as indices into generators().
  const std::vector<int>& word(int e) const { return words_[e]; }
  // Rendered word, e.g. "n0^2*h1"; identity renders as "1".
  std::string word_name(int e) const;
  int element_order(int e) const;
  bool is_abelian() const;

  // Present only for permutation-built groups: the image array of each
  // element, aligned with element indices.
  const std::vector<std::vector<int>>& perm_elements() const {
    return perms_;
  }

 private:
  void build_words_();
  void validate_();

  int n_ = 0;
  std::vector<int32_t> table_;
  std::vector<int> inv_;
  std::vector<int> gens_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> perms_;
};

// View of a subgroup of an ambient Group: sorted element list, its own
// generating set (ambient indices) and per-element words over it.
class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup whole(const Group& G);
  static Subgroup trivial(const Group& G);
  static Subgroup generated(const Group& G, const std::vector<int>& gens);
  // Validates closure of the given element set.
  static Subgroup from_elements(const Group& G, std::vector<int> elems);

  const Group& group() const { return *G_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const std::vector<int>& elements() const { return elems_; }
  const std::vector<int>& generators() const { return gens_; }
  bool contains(int e) const {
    return e >= 0 && e < static_cast<int>(pos_.size()) && pos_[e] >= 0;
  }
  int position(int e) const { return pos_[e]; }
  bool is_whole() const { return order() == G_->order(); }
  // Word of contained element e over generators().
  const std::vector<int>& word(int e) const { return words_[pos_[e]]; }
  bool contains_subgroup(const Subgroup& s) const;
  bool same_as(const Subgroup& s) const {
    return G_ == s.G_ && elems_ == s.elems_;
  }

  Subgroup conjugate_by(int x) const;  // x S x^-1

 private:
  void index_(int ambient_order);
  const Group* G_ = nullptr;
  std::vector<int> elems_;  // ascending
  std::vector<int> gens_;
  std::vector<std::vector<int>> words_;  // aligned with elems_
  std::vector<int> pos_;                 // ambient index -> position or -1
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Representatives of left cosets tH inside T, identity's coset first,
// then first-found in ascending element order. Requires H <= T.
std::vector<int> left_coset_reps(const Subgroup& T, const Subgroup& H);

// Representatives of (H1, H2)-double cosets inside T, identity first.
std::vector<int> double_coset_reps(const Subgroup& T, const Subgroup& H1,
                                   const Subgroup& H2);

// x H x^-1 intersected with H.
Subgroup conj_intersection(const Subgroup& H, int x);

}  // namespace gfrep
