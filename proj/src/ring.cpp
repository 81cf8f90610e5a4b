#include "rwa/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rwa {

namespace {

constexpr std::uint32_t kCachedTableSize = 256;

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h == 0 ? 1 : h;
}

void serialize(const RingSpec& s, std::ostringstream& out) {
  switch (s.kind) {
  case RingKind::zn:
    out << "zn(" << s.n << ")";
    break;
  case RingKind::gf:
    out << "gf(" << s.p << "," << s.k << ";";
    for (auto c : s.modulus)
      out << c << ",";
    out << ")";
    break;
  case RingKind::product:
    out << "product(";
    for (const auto& f : s.factors) {
      serialize(f, out);
      out << ";";
    }
    out << ")";
    break;
  case RingKind::table:
    out << "table(" << s.size << ";" << s.zero << ";" << s.one << ";";
    for (const auto& row : s.add)
      for (auto v : row)
        out << v << ",";
    out << ";";
    for (const auto& row : s.mul)
      for (auto v : row)
        out << v << ",";
    out << ")";
    break;
  }
}

using Poly = std::vector<std::uint32_t>;

// Remainder of a modulo a monic b over Z_p. Both ascending degree.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    std::uint64_t c = a[i];
    if (c == 0)
      continue;
    for (std::size_t j = 0; j <= db; ++j) {
      std::uint64_t sub = (c * b[j]) % p;
      a[i - db + j] = static_cast<std::uint32_t>((a[i - db + j] + p - sub) % p);
    }
  }
  a.resize(std::min(a.size(), db));
  return a;
}

bool is_irreducible(const Poly& modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  for (std::size_t d = 1; d <= k / 2; ++d) {
    // every monic polynomial of degree d
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      Poly r = poly_mod(modulus, divisor, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t v) { return v == 0; }))
        return false;
    }
  }
  return true;
}

} // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

RingSpec RingSpec::zn(std::uint64_t n) {
  RingSpec s;
  s.kind = RingKind::zn;
  s.n = n;
  return s;
}

RingSpec RingSpec::gf(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  RingSpec s;
  s.kind = RingKind::gf;
  s.p = p;
  s.k = k;
  s.modulus = std::move(modulus);
  return s;
}

RingSpec RingSpec::product(std::vector<RingSpec> factors) {
  RingSpec s;
  s.kind = RingKind::product;
  s.factors = std::move(factors);
  return s;
}

RingSpec RingSpec::table(std::vector<std::vector<std::uint32_t>> add,
                         std::vector<std::vector<std::uint32_t>> mul, std::uint32_t zero,
                         std::uint32_t one) {
  RingSpec s;
  s.kind = RingKind::table;
  s.size = static_cast<std::uint32_t>(add.size());
  s.add = std::move(add);
  s.mul = std::move(mul);
  s.zero = zero;
  s.one = one;
  return s;
}

struct Ring::Impl {
  RingSpec spec;
  std::uint32_t size = 0;
  std::uint32_t tag = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::uint64_t characteristic = 0;

  std::vector<Ring> factors;
  std::vector<std::uint32_t> strides; // product: mixed-radix place values

  // Cached operation tables, filled when size <= kCachedTableSize.
  std::vector<std::uint32_t> add_t, mul_t, neg_t;

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(spec.k);
    for (auto& v : d) {
      v = a % spec.p;
      a /= spec.p;
    }
    return d;
  }
  std::uint32_t undigits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;)
      a = a * spec.p + d[i];
    return a;
  }
  std::uint32_t component(std::uint32_t a, std::size_t i) const {
    return (a / strides[i]) % factors[i].size();
  }

  std::uint32_t raw_add(std::uint32_t a, std::uint32_t b) const {
    if (!add_t.empty())
      return add_t[a * size + b];
    switch (spec.kind) {
    case RingKind::zn:
      return static_cast<std::uint32_t>((std::uint64_t{a} + b) % spec.n);
    case RingKind::gf: {
      auto da = digits(a), db = digits(b);
      for (std::size_t i = 0; i < da.size(); ++i)
        da[i] = (da[i] + db[i]) % spec.p;
      return undigits(da);
    }
    case RingKind::product: {
      std::uint32_t r = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = *factors[i].impl_;
        r += f.raw_add(component(a, i), component(b, i)) * strides[i];
      }
      return r;
    }
    case RingKind::table:
      return spec.add[a][b];
    }
    return 0;
  }

  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const {
    if (!mul_t.empty())
      return mul_t[a * size + b];
    switch (spec.kind) {
    case RingKind::zn:
      return static_cast<std::uint32_t>((std::uint64_t{a} * b) % spec.n);
    case RingKind::gf: {
      auto da = digits(a), db = digits(b);
      Poly prod(2 * spec.k - 1, 0);
      for (std::size_t i = 0; i < da.size(); ++i)
        for (std::size_t j = 0; j < db.size(); ++j)
          prod[i + j] = static_cast<std::uint32_t>(
              (prod[i + j] + std::uint64_t{da[i]} * db[j]) % spec.p);
      Poly r = poly_mod(std::move(prod), spec.modulus, spec.p);
      r.resize(spec.k, 0);
      return undigits(r);
    }
    case RingKind::product: {
      std::uint32_t r = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = *factors[i].impl_;
        r += f.raw_mul(component(a, i), component(b, i)) * strides[i];
      }
      return r;
    }
    case RingKind::table:
      return spec.mul[a][b];
    }
    return 0;
  }

  std::uint32_t raw_neg(std::uint32_t a) const {
    if (!neg_t.empty())
      return neg_t[a];
    switch (spec.kind) {
    case RingKind::zn:
      return a == 0 ? 0 : static_cast<std::uint32_t>(spec.n - a);
    case RingKind::gf: {
      auto d = digits(a);
      for (auto& v : d)
        v = (spec.p - v) % spec.p;
      return undigits(d);
    }
    case RingKind::product: {
      std::uint32_t r = 0;
      for (std::size_t i = 0; i < factors.size(); ++i)
        r += factors[i].impl_->raw_neg(component(a, i)) * strides[i];
      return r;
    }
    case RingKind::table:
      for (std::uint32_t b = 0; b < size; ++b)
        if (spec.add[a][b] == zero)
          return b;
      throw Error("table ring: element without additive inverse");
    }
    return 0;
  }
};

namespace {

void finish_impl(Ring::Impl& impl) {
  std::ostringstream out;
  serialize(impl.spec, out);
  impl.tag = fnv1a(out.str());
  if (impl.size <= kCachedTableSize && impl.spec.kind != RingKind::table) {
    const std::uint32_t m = impl.size;
    std::vector<std::uint32_t> add(m * m), mul(m * m), neg(m);
    for (std::uint32_t a = 0; a < m; ++a) {
      neg[a] = impl.raw_neg(a);
      for (std::uint32_t b = 0; b < m; ++b) {
        add[a * m + b] = impl.raw_add(a, b);
        mul[a * m + b] = impl.raw_mul(a, b);
      }
    }
    impl.add_t = std::move(add);
    impl.mul_t = std::move(mul);
    impl.neg_t = std::move(neg);
  }
}

} // namespace

Ring Ring::from_spec(const RingSpec& spec, const RingLimits& limits) {
  auto impl = std::make_shared<Impl>();
  impl->spec = spec;

  switch (spec.kind) {
  case RingKind::zn:
    if (spec.n < 2)
      throw Error("zn ring requires n >= 2");
    if (spec.n > limits.max_size)
      throw Error("zn ring exceeds the size limit");
    impl->size = static_cast<std::uint32_t>(spec.n);
    impl->zero = 0;
    impl->one = 1;
    break;

  case RingKind::gf: {
    if (!is_prime(spec.p))
      throw Error("gf ring requires a prime p, got " + std::to_string(spec.p));
    if (spec.k < 1)
      throw Error("gf ring requires degree k >= 1");
    if (spec.modulus.size() != std::size_t{spec.k} + 1)
      throw Error("gf modulus must have k+1 coefficients");
    for (auto c : spec.modulus)
      if (c >= spec.p)
        throw Error("gf modulus coefficient out of range [0, p)");
    if (spec.modulus.back() != 1)
      throw Error("gf modulus must be monic");
    std::uint64_t size = 1;
    for (std::uint32_t i = 0; i < spec.k; ++i) {
      size *= spec.p;
      if (size > limits.max_size)
        throw Error("gf ring exceeds the size limit");
    }
    if (!is_irreducible(spec.modulus, spec.p))
      throw Error("gf modulus is reducible over Z_" + std::to_string(spec.p));
    impl->size = static_cast<std::uint32_t>(size);
    impl->zero = 0;
    impl->one = 1;
    break;
  }

  case RingKind::product: {
    if (spec.factors.empty())
      throw Error("product ring requires at least one factor");
    std::uint64_t size = 1;
    for (const auto& f : spec.factors) {
      impl->factors.push_back(Ring::from_spec(f, limits));
      impl->strides.push_back(static_cast<std::uint32_t>(size));
      size *= impl->factors.back().size();
      if (size > limits.max_size)
        throw Error("product ring exceeds the size limit");
    }
    impl->size = static_cast<std::uint32_t>(size);
    impl->zero = 0;
    impl->one = 0;
    for (std::size_t i = 0; i < impl->factors.size(); ++i)
      impl->one += impl->factors[i].one().index() * impl->strides[i];
    break;
  }

  case RingKind::table: {
    const std::uint32_t m = spec.size;
    if (m < 2)
      throw Error("table ring requires at least two elements");
    if (m > limits.max_table_size)
      throw Error("table ring exceeds the configured size cap of " +
                  std::to_string(limits.max_table_size));
    auto check_table = [m](const std::vector<std::vector<std::uint32_t>>& t, const char* what) {
      if (t.size() != m)
        throw Error(std::string("table ring: ") + what + " table must have size rows");
      for (const auto& row : t) {
        if (row.size() != m)
          throw Error(std::string("table ring: ") + what + " table must be square");
        for (auto v : row)
          if (v >= m)
            throw Error(std::string("table ring: ") + what + " table entry out of range");
      }
    };
    check_table(spec.add, "addition");
    check_table(spec.mul, "multiplication");
    if (spec.zero >= m || spec.one >= m)
      throw Error("table ring: zero/one index out of range");
    if (spec.zero == spec.one)
      throw Error("table ring is trivial (zero == one)");
    impl->size = m;
    impl->zero = spec.zero;
    impl->one = spec.one;
    break;
  }
  }

  if (impl->zero == impl->one)
    throw Error("ring is trivial (zero == one)");

  if (spec.kind == RingKind::table) {
    // neg lookups scan the table, so validate before anything else uses it
    std::ostringstream out;
    serialize(impl->spec, out);
    impl->tag = fnv1a(out.str());
    Ring probe(impl);
    if (auto v = find_axiom_violation(probe); !v.empty())
      throw Error("table ring violates axioms: " + v);
    std::vector<std::uint32_t> neg(impl->size);
    for (std::uint32_t a = 0; a < impl->size; ++a)
      neg[a] = impl->raw_neg(a);
    impl->neg_t = std::move(neg);
  } else {
    finish_impl(*impl);
  }

  Ring r(impl);
  std::uint64_t c = 1;
  for (RingElement x = r.one(); !r.is_zero(x); x = r.add(x, r.one()))
    ++c;
  impl->characteristic = c;
  return r;
}

Ring ring_from_spec(const RingSpec& spec, const RingLimits& limits) {
  return Ring::from_spec(spec, limits);
}

const RingSpec& Ring::spec() const noexcept { return impl_->spec; }
std::uint32_t Ring::size() const noexcept { return impl_->size; }
std::uint32_t Ring::tag() const noexcept { return impl_->tag; }

std::string Ring::name() const {
  const auto& s = spec();
  switch (s.kind) {
  case RingKind::zn:
    return "Z_" + std::to_string(s.n);
  case RingKind::gf:
    return "GF(" + std::to_string(s.p) + "^" + std::to_string(s.k) + ")";
  case RingKind::product: {
    std::string out;
    for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
      if (i > 0)
        out += " x ";
      out += impl_->factors[i].name();
    }
    return out;
  }
  case RingKind::table:
    return "table(" + std::to_string(s.size) + ")";
  }
  return {};
}

void Ring::check(RingElement a) const {
  if (a.tag_ != impl_->tag)
    throw Error("ring element belongs to a different ring");
  if (a.index_ >= impl_->size)
    throw Error("ring element index out of range");
}

bool Ring::contains(RingElement a) const noexcept {
  return a.tag_ == impl_->tag && a.index_ < impl_->size;
}

RingElement Ring::zero() const { return {impl_->zero, impl_->tag}; }
RingElement Ring::one() const { return {impl_->one, impl_->tag}; }

RingElement Ring::add(RingElement a, RingElement b) const {
  check(a);
  check(b);
  return {impl_->raw_add(a.index_, b.index_), impl_->tag};
}

RingElement Ring::mul(RingElement a, RingElement b) const {
  check(a);
  check(b);
  return {impl_->raw_mul(a.index_, b.index_), impl_->tag};
}

RingElement Ring::neg(RingElement a) const {
  check(a);
  return {impl_->raw_neg(a.index_), impl_->tag};
}

bool Ring::is_zero(RingElement a) const {
  check(a);
  return a.index_ == impl_->zero;
}

RingElement Ring::from_int(std::int64_t m) const {
  const std::uint64_t ch = impl_->characteristic;
  std::uint64_t magnitude = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : std::uint64_t(m);
  if (ch != 0)
    magnitude %= ch;
  // double-and-add on 1
  RingElement acc = zero(), base = one();
  while (magnitude > 0) {
    if (magnitude & 1)
      acc = add(acc, base);
    base = add(base, base);
    magnitude >>= 1;
  }
  return m < 0 ? neg(acc) : acc;
}

RingElement Ring::element(std::uint32_t index) const {
  if (index >= impl_->size)
    throw Error("ring element index out of range");
  return {index, impl_->tag};
}

std::vector<RingElement> Ring::elements() const {
  std::vector<RingElement> out;
  out.reserve(impl_->size);
  for (std::uint32_t i = 0; i < impl_->size; ++i)
    out.push_back({i, impl_->tag});
  return out;
}

std::uint64_t Ring::characteristic() const { return impl_->characteristic; }

std::uint64_t Ring::residue(RingElement a) const {
  check(a);
  if (kind() != RingKind::zn && kind() != RingKind::table)
    throw Error("residue encoding only applies to zn and table rings");
  return a.index_;
}

RingElement Ring::from_residue(std::uint64_t r) const {
  if (kind() != RingKind::zn && kind() != RingKind::table)
    throw Error("residue encoding only applies to zn and table rings");
  if (r >= impl_->size)
    throw Error("element encoding " + std::to_string(r) + " out of range for " + name());
  return {static_cast<std::uint32_t>(r), impl_->tag};
}

std::vector<std::uint32_t> Ring::coefficients(RingElement a) const {
  check(a);
  if (kind() != RingKind::gf)
    throw Error("coefficient encoding only applies to gf rings");
  return impl_->digits(a.index_);
}

RingElement Ring::from_coefficients(std::span<const std::uint32_t> coeffs) const {
  if (kind() != RingKind::gf)
    throw Error("coefficient encoding only applies to gf rings");
  if (coeffs.size() != spec().k)
    throw Error("gf element must have exactly k coefficients");
  for (auto c : coeffs)
    if (c >= spec().p)
      throw Error("gf coefficient out of range [0, p)");
  return {impl_->undigits({coeffs.begin(), coeffs.end()}), impl_->tag};
}

const std::vector<Ring>& Ring::factors() const {
  if (kind() != RingKind::product)
    throw Error("only product rings have factors");
  return impl_->factors;
}

std::vector<RingElement> Ring::components(RingElement a) const {
  check(a);
  const auto& fs = factors();
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < fs.size(); ++i)
    out.push_back(fs[i].element(impl_->component(a.index_, i)));
  return out;
}

RingElement Ring::from_components(std::span<const RingElement> parts) const {
  const auto& fs = factors();
  if (parts.size() != fs.size())
    throw Error("product element must have one component per factor");
  std::uint32_t idx = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    fs[i].check(parts[i]);
    idx += parts[i].index_ * impl_->strides[i];
  }
  return {idx, impl_->tag};
}

bool operator==(const Ring& a, const Ring& b) {
  return a.impl_ == b.impl_ || (a.impl_->tag == b.impl_->tag && a.impl_->spec == b.impl_->spec);
}

std::string find_axiom_violation(const Ring& r) {
  const auto els = r.elements();
  const auto zero = r.zero(), one = r.one();
  auto show = [](RingElement e) { return std::to_string(e.index()); };
  for (auto a : els) {
    if (r.add(zero, a) != a || r.add(a, zero) != a)
      return "zero is not an additive identity for element " + show(a);
    if (r.mul(one, a) != a || r.mul(a, one) != a)
      return "one is not a multiplicative identity for element " + show(a);
    if (r.mul(zero, a) != zero)
      return "zero is not absorbing for element " + show(a);
    bool has_inverse = false;
    for (auto b : els)
      if (r.add(a, b) == zero) {
        has_inverse = true;
        break;
      }
    if (!has_inverse)
      return "element " + show(a) + " has no additive inverse";
    for (auto b : els) {
      if (r.add(a, b) != r.add(b, a))
        return "addition is not commutative at (" + show(a) + "," + show(b) + ")";
      if (r.mul(a, b) != r.mul(b, a))
        return "multiplication is not commutative at (" + show(a) + "," + show(b) + ")";
    }
  }
  for (auto a : els)
    for (auto b : els) {
      const auto ab_sum = r.add(a, b), ab_prod = r.mul(a, b);
      for (auto c : els) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c)))
          return "addition is not associative";
        if (r.mul(ab_prod, c) != r.mul(a, r.mul(b, c)))
          return "multiplication is not associative";
        if (r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c)))
          return "multiplication does not distribute over addition";
      }
    }
  return {};
}

RingElement Subring::to_subring(RingElement parent) const {
  auto it = std::lower_bound(members.begin(), members.end(), parent);
  if (it == members.end() || *it != parent)
    throw Error("element is not a member of the subring");
  return ring.element(static_cast<std::uint32_t>(it - members.begin()));
}

Subring generated_subring(const Ring& r, std::span<const RingElement> generators) {
  std::vector<bool> in(r.size(), false);
  std::vector<RingElement> members;
  auto insert = [&](RingElement e) {
    if (!in[e.index()]) {
      in[e.index()] = true;
      members.push_back(e);
    }
  };
  insert(r.zero());
  insert(r.one());
  for (auto g : generators) {
    if (!r.contains(g))
      throw Error("subring generator is not an element of the ring");
    insert(g);
  }
  // members grows while we scan; every pair (i, j) with j <= i is combined once
  for (std::size_t i = 0; i < members.size(); ++i) {
    insert(r.neg(members[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      insert(r.add(members[i], members[j]));
      insert(r.mul(members[i], members[j]));
    }
  }
  std::sort(members.begin(), members.end());

  const auto m = static_cast<std::uint32_t>(members.size());
  std::vector<std::uint32_t> position(r.size(), 0);
  for (std::uint32_t i = 0; i < m; ++i)
    position[members[i].index()] = i;
  std::vector<std::vector<std::uint32_t>> add(m, std::vector<std::uint32_t>(m));
  auto mul = add;
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) {
      add[i][j] = position[r.add(members[i], members[j]).index()];
      mul[i][j] = position[r.mul(members[i], members[j]).index()];
    }
  RingLimits limits;
  limits.max_table_size = std::max(limits.max_table_size, m);
  auto spec = RingSpec::table(std::move(add), std::move(mul), position[r.zero().index()],
                              position[r.one().index()]);
  return {Ring::from_spec(spec, limits), std::move(members)};
}

RingSpec to_table_spec(const Ring& r) {
  const auto m = r.size();
  std::vector<std::vector<std::uint32_t>> add(m, std::vector<std::uint32_t>(m));
  auto mul = add;
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = 0; j < m; ++j) {
      add[i][j] = r.add(r.element(i), r.element(j)).index();
      mul[i][j] = r.mul(r.element(i), r.element(j)).index();
    }
  return RingSpec::table(std::move(add), std::move(mul), r.zero().index(), r.one().index());
}

} // namespace rwa
