#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealgraph/errors.hpp"

namespace idealgraph {

inline constexpr long long kDefaultIdealEnumCap = 4096;
inline constexpr int kDefaultIndependenceCap = 64;

// ---------------------------------------------------------------------------
// Ring specifications
// ---------------------------------------------------------------------------

/// The supported local building blocks. Every finite commutative ring handled
/// by this library is an ordered product of these.
///
///   Field(q)    — GF(q), q a prime power. Ideals: 0, R.
///   Chain(q,k)  — local ring whose ideals form the chain R > m > ... > m^k = 0
///                 (e.g. Z_{p^k}); residue field GF(q), k >= 2 after
///                 canonicalization. Ideals: k+1.
///   VSLocal(q,d)— local ring with m^2 = 0 and m a d-dimensional vector space
///                 over GF(q), q prime, d >= 2. Ideals below R correspond to
///                 the subspaces of GF(q)^d.
enum class BlockKind { Field, Chain, VSLocal };

struct BlockSpec {
  BlockKind kind = BlockKind::Field;
  int q = 2;  // residue field size
  int k = 1;  // Chain: nilpotency index (Field behaves as k == 1)
  int d = 0;  // VSLocal: dimension of the maximal ideal

  long long ideal_count() const;
  std::string label() const;

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

/// Orders blocks by (kind, q, k, d); used for canonical multiset ordering.
bool block_less(const BlockSpec& a, const BlockSpec& b);

struct RingSpec {
  std::vector<BlockSpec> blocks;
  std::string source_text;

  long long total_ideal_count() const;
  long long nontrivial_ideal_count() const;
  /// Normalized textual form, e.g. "chain(2,2) x GF(3)".
  std::string canonical_text() const;
};

/// Parses the ring-spec grammar:
///   spec := term ( "x" term )*
///   term := "GF(" int ")" | "Z" int | "chain(" int "," int ")" | "vs(" int "," int ")"
/// Whitespace around tokens is ignored. Canonicalizes: Zn is factored into one
/// Chain/Field block per prime power (ascending prime), chain(q,1) becomes
/// GF(q), vs(q,1) becomes chain(q,2).
RingSpec parse_ring_spec(std::string_view text);

/// True iff every block is a field (the ring has no nonzero nilpotents).
bool is_reduced(const RingSpec& spec);

// ---------------------------------------------------------------------------
// Subspaces of GF(q)^d, canonical RREF bases
// ---------------------------------------------------------------------------

/// A subspace of GF(q)^d stored as its unique reduced-row-echelon basis, so
/// equality is structural equality.
struct Subspace {
  int q = 2;
  int ambient_dim = 0;
  std::vector<std::vector<int>> basis;  // RREF rows, entries in [0, q)

  int dim() const { return static_cast<int>(basis.size()); }
  bool is_zero() const { return basis.empty(); }
  bool is_full() const { return dim() == ambient_dim; }

  friend bool operator==(const Subspace&, const Subspace&) = default;
};

Subspace rref_span(int q, int ambient_dim, std::vector<std::vector<int>> rows);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
bool subspace_leq(const Subspace& inner, const Subspace& outer);

/// All subspaces of GF(q)^d in canonical order: dimension descending, then
/// basis lexicographic. The full space is first, the zero space last.
std::vector<Subspace> enumerate_subspaces(int q, int d);

/// Number of r-dimensional subspaces of GF(q)^n.
long long gaussian_binomial(int n, int r, int q);

// ---------------------------------------------------------------------------
// Per-block ideal lattices
// ---------------------------------------------------------------------------

/// One ideal of a single block. Chain/Field ideals are the powers m^e
/// (e = 0 is the whole block, e = k is zero). VSLocal ideals are either the
/// whole block or a subspace of m (the zero and full subspaces included).
struct BlockIdeal {
  int exponent = 0;        // Chain/Field
  bool whole_ring = false; // VSLocal: the block itself
  Subspace space;          // VSLocal: subspace of m when !whole_ring
};

/// Finite lattice of the ideals of one block, with precomputed meet/join/
/// product/containment tables. Canonical index order puts the whole block
/// first and the zero ideal last.
class BlockLattice {
 public:
  explicit BlockLattice(const BlockSpec& spec);

  const BlockSpec& spec() const { return spec_; }
  int size() const { return static_cast<int>(ideals_.size()); }
  int full_index() const { return 0; }
  int zero_index() const { return size() - 1; }

  const BlockIdeal& ideal(int i) const { return ideals_[i]; }
  int meet(int a, int b) const { return meet_[a * size() + b]; }
  int join(int a, int b) const { return join_[a * size() + b]; }
  int product(int a, int b) const { return prod_[a * size() + b]; }
  bool leq(int a, int b) const { return leq_[a * size() + b] != 0; }
  bool join_irreducible(int i) const { return ji_[i] != 0; }
  std::string label(int i) const;

 private:
  BlockSpec spec_;
  std::vector<BlockIdeal> ideals_;
  std::vector<int> meet_, join_, prod_;
  std::vector<char> leq_;
  std::vector<char> ji_;
};

// ---------------------------------------------------------------------------
// Rings and their ideals
// ---------------------------------------------------------------------------

/// One ideal of a ring: per-block lattice indices, one per block of the
/// owning ring. A plain value; all arithmetic goes through Ring.
struct Ideal {
  std::vector<int> coords;

  friend bool operator==(const Ideal&, const Ideal&) = default;
  friend auto operator<=>(const Ideal& a, const Ideal& b) { return a.coords <=> b.coords; }
};

/// Immutable model of a finite commutative ring as a product of local blocks,
/// exposing the full ideal lattice. All operations are pure; instances are
/// safe to share across threads.
class Ring {
 public:
  explicit Ring(RingSpec spec);
  explicit Ring(std::string_view text);

  const RingSpec& spec() const { return spec_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const BlockLattice& block(int b) const { return blocks_[b]; }

  long long total_ideal_count() const;
  long long nontrivial_ideal_count() const { return total_ideal_count() - 2; }

  Ideal zero() const;
  Ideal unit() const;
  bool is_zero(const Ideal& a) const;
  bool is_unit(const Ideal& a) const;
  bool is_nontrivial(const Ideal& a) const { return !is_zero(a) && !is_unit(a); }

  /// Coordinatewise lattice meet (intersection of ideals).
  Ideal meet(const Ideal& a, const Ideal& b) const;
  /// Coordinatewise lattice join (sum of ideals).
  Ideal join(const Ideal& a, const Ideal& b) const;
  /// Coordinatewise ideal product; always contained in the meet.
  Ideal product(const Ideal& a, const Ideal& b) const;
  /// Containment a <= b in the ideal lattice.
  bool leq(const Ideal& a, const Ideal& b) const;

  /// Position of an ideal in the canonical enumeration (mixed-radix rank).
  /// Rank 0 is the unit ideal, the last rank is the zero ideal.
  long long ideal_rank(const Ideal& a) const;
  Ideal ideal_from_rank(long long rank) const;

  /// All ideals in canonical order. Throws CapExceeded when the total count
  /// exceeds `cap`.
  std::vector<Ideal> enumerate_ideals(long long cap = kDefaultIdealEnumCap) const;
  std::vector<Ideal> nontrivial_ideals(long long cap = kDefaultIdealEnumCap) const;

  /// Human-readable label, e.g. "(m^1, 0)".
  std::string ideal_label(const Ideal& a) const;

  bool join_irreducible(const Ideal& a) const;
  /// Nontrivial ideals that are join-irreducible in the product lattice:
  /// exactly one nonzero coordinate, itself join-irreducible in its block.
  std::vector<Ideal> join_irreducible_ideals() const;

  /// Throws std::invalid_argument when `a` is not an ideal of this ring.
  void check_member(const Ideal& a) const;

 private:
  RingSpec spec_;
  std::vector<BlockLattice> blocks_;
  std::vector<long long> strides_;
};

// ---------------------------------------------------------------------------
// Independent families
// ---------------------------------------------------------------------------

/// Ideals a_1..a_n with a_i meeting the sum of the others in zero, so their
/// sum is direct.
struct IndependentFamily {
  std::vector<Ideal> members;
  bool witness_checked = false;
};

/// Checks the definition directly: for every i, meet(members[i], join of the
/// rest) is zero. Throws on an empty family or a trivial member.
bool is_independent_family(const Ring& ring, const std::vector<Ideal>& members);

struct MaxIndependent {
  int t = 0;
  IndependentFamily witness;
};

/// Largest t <= limit such that an independent family of size t exists, with
/// one witness. Exhaustive over join-irreducible candidates first (any
/// independent family refines to one of equal size built from them), then
/// over all nontrivial ideals as a fallback. Throws CapExceeded when the
/// nontrivial ideal count exceeds `cap`, std::invalid_argument when the ring
/// has no nontrivial ideal or limit < 1.
MaxIndependent max_independent_family(const Ring& ring, int limit,
                                      long long cap = kDefaultIndependenceCap);

}  // namespace idealgraph
