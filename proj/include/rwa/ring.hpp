#ifndef RWA_RING_HPP
#define RWA_RING_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "rwa/alphabet.hpp"

namespace rwa {

enum class RingKind { zn, gf, product, table };

/// Structural presentation of a finite commutative ring with unity.
struct RingSpec {
  RingKind kind = RingKind::zn;

  // zn
  std::uint64_t n = 0;

  // gf: GF(p^k) as Z_p[x] / (modulus), coefficients in ascending degree
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::vector<std::uint32_t> modulus;

  // product
  std::vector<RingSpec> factors;

  // table
  std::uint32_t size = 0;
  std::vector<std::vector<std::uint32_t>> add;
  std::vector<std::vector<std::uint32_t>> mul;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;

  static RingSpec zn(std::uint64_t n);
  static RingSpec gf(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec table(std::vector<std::vector<std::uint32_t>> add,
                        std::vector<std::vector<std::uint32_t>> mul, std::uint32_t zero,
                        std::uint32_t one);

  bool operator==(const RingSpec&) const = default;
};

struct RingLimits {
  /// Largest table ring accepted by ring_from_spec; axiom checks are cubic in the size.
  std::uint32_t max_table_size = 256;
  /// Largest carrier of any ring; every element must be enumerable.
  std::uint64_t max_size = std::uint64_t{1} << 24;
};

/// An element of a particular Ring.
///
/// The index is the element's position in the ring's enumeration order, which
/// is a bijection with canonical encodings. The tag identifies the ring (equal
/// specs give equal tags) so that operands from different rings are rejected.
class RingElement {
public:
  RingElement() = default;

  std::uint32_t index() const noexcept { return index_; }
  std::uint32_t ring_tag() const noexcept { return tag_; }

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;

private:
  friend class Ring;
  RingElement(std::uint32_t index, std::uint32_t tag) : index_(index), tag_(tag) {}

  std::uint32_t index_ = 0;
  std::uint32_t tag_ = 0;
};

/// A validated nontrivial finite commutative ring with unity.
///
/// Values share an immutable implementation and are cheap to copy.
class Ring {
public:
  static Ring from_spec(const RingSpec& spec, const RingLimits& limits = {});

  const RingSpec& spec() const noexcept;
  RingKind kind() const noexcept { return spec().kind; }
  std::uint32_t size() const noexcept;
  std::uint32_t tag() const noexcept;

  /// Short human-readable name, e.g. "Z_6", "GF(2^2)", "Z_2 x Z_3", "table(4)".
  std::string name() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement add(RingElement a, RingElement b) const;
  RingElement mul(RingElement a, RingElement b) const;
  RingElement neg(RingElement a) const;
  RingElement sub(RingElement a, RingElement b) const { return add(a, neg(b)); }
  bool is_zero(RingElement a) const;

  /// m * 1 for a signed integer m, computed by repeated addition.
  RingElement from_int(std::int64_t m) const;

  /// Element with the given enumeration index.
  RingElement element(std::uint32_t index) const;
  bool contains(RingElement a) const noexcept;

  /// Every element exactly once, in canonical-encoding order.
  std::vector<RingElement> elements() const;

  /// Smallest n >= 1 with n * 1 = 0.
  std::uint64_t characteristic() const;

  // Canonical encodings.
  //   zn: integer residue
  //   gf: k coefficients in [0, p), ascending degree
  //   product: one element per factor
  //   table: index
  // Enumeration order treats an encoding as a little-endian mixed-radix
  // number (the first coordinate varies fastest).
  std::uint64_t residue(RingElement a) const;
  RingElement from_residue(std::uint64_t r) const;
  std::vector<std::uint32_t> coefficients(RingElement a) const;
  RingElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
  const std::vector<Ring>& factors() const;
  std::vector<RingElement> components(RingElement a) const;
  RingElement from_components(std::span<const RingElement> parts) const;

  friend bool operator==(const Ring& a, const Ring& b);

  struct Impl;

private:
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  void check(RingElement a) const;

  std::shared_ptr<const Impl> impl_;
};

Ring ring_from_spec(const RingSpec& spec, const RingLimits& limits = {});

/// Exhaustively checks the commutative ring axioms on the carrier.
/// Returns an empty string when they hold, otherwise a description of the
/// first violation found.
std::string find_axiom_violation(const Ring& r);

/// Smallest subring containing 0, 1 and the generators, as a table ring.
struct Subring {
  Ring ring;
  /// members[i] is the element of the parent ring represented by index i.
  std::vector<RingElement> members;

  /// Maps a parent element into the subring; throws Error if it is not a member.
  RingElement to_subring(RingElement parent) const;
};

Subring generated_subring(const Ring& r, std::span<const RingElement> generators);

/// The table presentation of any ring (same element indices).
RingSpec to_table_spec(const Ring& r);

bool is_prime(std::uint64_t n);

} // namespace rwa

#endif // RWA_RING_HPP
