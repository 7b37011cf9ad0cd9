#include "gnoe/twist.hpp"

#include <algorithm>
#include <functional>

#include "rings_impl.hpp"

namespace gnoe {

struct AdditiveMap::Node {
  MapKind kind = MapKind::Identity;
  RingHandle ring;
  long parameter = 0;
  std::vector<AdditiveMap> children;  // IteratedPower with n < 0: {inner, inverse of inner}
  RingElement element;
  std::vector<RingElement> images;
};

namespace {

const detail::PolyRing& poly_ring_of(const RingHandle& ring, const char* what) {
  if (auto* p = dynamic_cast<const detail::PolyRing*>(ring.get())) return *p;
  throw Error(ErrorCode::UndefinedForKind, std::string(what) + " needs a polynomial ring, got " + ring->descriptor().to_string());
}

const detail::FiniteFieldRing& finite_field_of(const RingHandle& ring) {
  if (auto* f = dynamic_cast<const detail::FiniteFieldRing*>(ring.get())) return *f;
  throw Error(ErrorCode::UndefinedForKind, "Frobenius needs a finite field, got " + ring->descriptor().to_string());
}

const RingHandle& common_ring(const std::vector<AdditiveMap>& maps) {
  if (maps.empty()) throw Error(ErrorCode::ContractViolation, "empty map list");
  for (const auto& m : maps)
    if (!same_ring(*m.ring(), *maps.front().ring()))
      throw Error(ErrorCode::OwnerMismatch, m.ring()->descriptor().to_string() + " vs " +
                                                maps.front().ring()->descriptor().to_string());
  return maps.front().ring();
}

}  // namespace

AdditiveMap AdditiveMap::identity(RingHandle ring) {
  auto node = std::make_shared<Node>();
  node->ring = std::move(ring);
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::zero(RingHandle ring) {
  auto node = std::make_shared<Node>();
  node->kind = MapKind::Zero;
  node->ring = std::move(ring);
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::frobenius(RingHandle ring, unsigned e) {
  finite_field_of(ring);
  if (e < 1) throw Error(ErrorCode::InvalidDescriptor, "Frobenius exponent must be at least 1");
  auto node = std::make_shared<Node>();
  node->kind = MapKind::FrobeniusPower;
  node->ring = std::move(ring);
  node->parameter = e;
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::substitution(RingHandle ring, unsigned k) {
  poly_ring_of(ring, "substitution");
  if (k < 1) throw Error(ErrorCode::InvalidDescriptor, "substitution exponent must be at least 1");
  auto node = std::make_shared<Node>();
  node->kind = MapKind::Substitution;
  node->ring = std::move(ring);
  node->parameter = k;
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::formal_derivative(RingHandle ring) {
  poly_ring_of(ring, "formal derivative");
  auto node = std::make_shared<Node>();
  node->kind = MapKind::FormalDerivative;
  node->ring = std::move(ring);
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::conjugation(RingHandle ring) {
  ring->conjugate(ring->one());  // throws UndefinedForKind when there is no involution
  auto node = std::make_shared<Node>();
  node->kind = MapKind::Conjugation;
  node->ring = std::move(ring);
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::inner_derivation(const RingElement& c) {
  auto node = std::make_shared<Node>();
  node->kind = MapKind::InnerDerivation;
  node->ring = c.owner();
  node->element = c;
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::table(RingHandle ring, std::vector<RingElement> images) {
  const auto n = ring->cardinality();
  if (!n) throw Error(ErrorCode::UndefinedForKind, "table maps need a finite ring");
  if (images.size() != *n)
    throw Error(ErrorCode::InvalidDescriptor,
                "table has " + std::to_string(images.size()) + " images for " + std::to_string(*n) + " elements");
  for (const auto& img : images) ring->require_owned(img);
  auto node = std::make_shared<Node>();
  node->kind = MapKind::Table;
  node->ring = std::move(ring);
  node->images = std::move(images);
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::sum(std::vector<AdditiveMap> terms) {
  auto node = std::make_shared<Node>();
  node->kind = MapKind::Sum;
  node->ring = common_ring(terms);
  node->children = std::move(terms);
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::compose(std::vector<AdditiveMap> maps) {
  auto node = std::make_shared<Node>();
  node->kind = MapKind::Compose;
  node->ring = common_ring(maps);
  node->children = std::move(maps);
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::negate(AdditiveMap inner) {
  auto node = std::make_shared<Node>();
  node->kind = MapKind::Negate;
  node->ring = inner.ring();
  node->children = {std::move(inner)};
  return AdditiveMap(node);
}

AdditiveMap AdditiveMap::power(AdditiveMap inner, long n) {
  if (n < 0) throw Error(ErrorCode::InvalidDescriptor, "negative powers are built by invert_map");
  auto node = std::make_shared<Node>();
  node->kind = MapKind::IteratedPower;
  node->ring = inner.ring();
  node->parameter = n;
  node->children = {std::move(inner)};
  return AdditiveMap(node);
}

MapKind AdditiveMap::kind() const { return node_->kind; }
const RingHandle& AdditiveMap::ring() const { return node_->ring; }
long AdditiveMap::parameter() const { return node_->parameter; }
const std::vector<AdditiveMap>& AdditiveMap::children() const { return node_->children; }
const RingElement& AdditiveMap::element() const { return node_->element; }

RingElement AdditiveMap::operator()(const RingElement& r) const {
  const Node& n = *node_;
  n.ring->require_owned(r);
  switch (n.kind) {
    case MapKind::Identity:
      return r;
    case MapKind::Zero:
      return n.ring->zero();
    case MapKind::FrobeniusPower:
      return finite_field_of(n.ring).frobenius(r, static_cast<unsigned>(n.parameter));
    case MapKind::Substitution: {
      const auto& P = poly_ring_of(n.ring, "substitution");
      const auto& c = P.coefficients(r);
      if (c.empty()) return r;
      std::vector<RingElement> out((c.size() - 1) * static_cast<std::size_t>(n.parameter) + 1, P.field()->zero());
      for (std::size_t i = 0; i < c.size(); ++i) out[i * static_cast<std::size_t>(n.parameter)] = c[i];
      return P.from_coefficients(std::move(out));
    }
    case MapKind::FormalDerivative: {
      const auto& P = poly_ring_of(n.ring, "formal derivative");
      const auto& c = P.coefficients(r);
      std::vector<RingElement> out;
      for (std::size_t i = 1; i < c.size(); ++i)
        out.push_back(P.field()->mul(P.field()->from_integer(mpz_class(static_cast<unsigned long>(i))), c[i]));
      return P.from_coefficients(std::move(out));
    }
    case MapKind::Conjugation:
      return n.ring->conjugate(r);
    case MapKind::InnerDerivation:
      return n.ring->add(n.ring->mul(n.element, r), n.ring->neg(n.ring->mul(r, n.element)));
    case MapKind::Table:
      return n.images[n.ring->index_of(r)];
    case MapKind::Sum: {
      RingElement acc = n.ring->zero();
      for (const auto& f : n.children) acc = n.ring->add(acc, f(r));
      return acc;
    }
    case MapKind::Compose: {
      RingElement acc = r;
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) acc = (*it)(acc);
      return acc;
    }
    case MapKind::Negate:
      return n.ring->neg(n.children[0](r));
    case MapKind::IteratedPower: {
      const AdditiveMap& step = n.parameter >= 0 ? n.children[0] : n.children[1];
      RingElement acc = r;
      for (long i = 0; i < std::abs(n.parameter); ++i) acc = step(acc);
      return acc;
    }
  }
  throw Error(ErrorCode::UndefinedForKind, "unknown map kind");
}

std::string AdditiveMap::describe() const {
  const Node& n = *node_;
  auto list = [&](const std::string& name) {
    std::string out = name + "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) out += (i ? "," : "") + n.children[i].describe();
    return out + ")";
  };
  switch (n.kind) {
    case MapKind::Identity: return "identity";
    case MapKind::Zero: return "zero";
    case MapKind::FrobeniusPower: return "frobenius(" + std::to_string(n.parameter) + ")";
    case MapKind::Substitution: return "substitution(" + std::to_string(n.parameter) + ")";
    case MapKind::FormalDerivative: return "derivative";
    case MapKind::Conjugation: return "conjugation";
    case MapKind::InnerDerivation: return "inner(" + n.element.to_string() + ")";
    case MapKind::Table: return "table(" + std::to_string(n.images.size()) + ")";
    case MapKind::Sum: return list("sum");
    case MapKind::Compose: return list("compose");
    case MapKind::Negate: return list("negate");
    case MapKind::IteratedPower: return "power(" + n.children[0].describe() + "," + std::to_string(n.parameter) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Inverses and preimages
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void not_invertible(const AdditiveMap& f, const std::string& why) {
  throw Error(ErrorCode::NotInvertible, f.describe() + ": " + why);
}

// Inverse of a map on a finite ring, by tabulating it.
AdditiveMap tabulated_inverse(const AdditiveMap& f) {
  const Ring& R = *f.ring();
  const std::uint64_t n = *R.cardinality();
  std::vector<RingElement> inverse(n);
  std::vector<bool> hit(n, false);
  for (std::uint64_t i = 0; i < n; ++i) {
    const RingElement x = R.element_at(i);
    const std::uint64_t j = R.index_of(f(x));
    if (hit[j]) not_invertible(f, "two elements share the image " + R.format(R.element_at(j)));
    hit[j] = true;
    inverse[j] = x;
  }
  return AdditiveMap::table(f.ring(), std::move(inverse));
}

}  // namespace

AdditiveMap invert_map(const AdditiveMap& f) {
  const auto& R = f.ring();
  switch (f.kind()) {
    case MapKind::Identity:
    case MapKind::Conjugation:
      return f;
    case MapKind::FrobeniusPower: {
      const unsigned k = finite_field_of(R).extension_degree();
      const unsigned e = static_cast<unsigned>(f.parameter()) % k;
      if (e == 0) return AdditiveMap::identity(R);
      return AdditiveMap::frobenius(R, k - e);
    }
    case MapKind::Substitution:
      if (f.parameter() == 1) return AdditiveMap::identity(R);
      not_invertible(f, "Y is not in the image");
    case MapKind::FormalDerivative:
      not_invertible(f, "constants lie in the kernel");
    case MapKind::InnerDerivation:
      not_invertible(f, "1 lies in the kernel");
    case MapKind::Zero:
      not_invertible(f, "1 lies in the kernel");
    case MapKind::Negate:
      return AdditiveMap::negate(invert_map(f.children()[0]));
    case MapKind::Compose: {
      std::vector<AdditiveMap> inverses;
      for (auto it = f.children().rbegin(); it != f.children().rend(); ++it) inverses.push_back(invert_map(*it));
      return AdditiveMap::compose(std::move(inverses));
    }
    case MapKind::IteratedPower: {
      if (f.parameter() < 0) return AdditiveMap::power(f.children()[0], -f.parameter());
      auto node = std::make_shared<AdditiveMap::Node>();
      node->kind = MapKind::IteratedPower;
      node->ring = R;
      node->parameter = -f.parameter();
      node->children = {f.children()[0], invert_map(f.children()[0])};
      return AdditiveMap(node);
    }
    case MapKind::Table:
    case MapKind::Sum:
      break;
  }
  if (R->is_finite()) return tabulated_inverse(f);
  not_invertible(f, "no inverse rule on the infinite ring " + R->descriptor().to_string());
}

std::optional<RingElement> preimage(const AdditiveMap& f, const RingElement& r) {
  const auto& R = f.ring();
  R->require_owned(r);
  switch (f.kind()) {
    case MapKind::Substitution: {
      const auto& P = poly_ring_of(R, "substitution");
      const auto k = static_cast<std::size_t>(f.parameter());
      const auto& c = P.coefficients(r);
      std::vector<RingElement> out;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % k == 0) {
          out.push_back(c[i]);
        } else if (!c[i].is_zero()) {
          return std::nullopt;
        }
      }
      return P.from_coefficients(std::move(out));
    }
    case MapKind::Compose: {
      std::optional<RingElement> x = r;
      for (const auto& g : f.children()) {
        x = preimage(g, *x);
        if (!x) return std::nullopt;
      }
      return x;
    }
    case MapKind::IteratedPower:
      if (f.parameter() >= 0) return preimage_power(f.children()[0], static_cast<std::size_t>(f.parameter()), r);
      break;
    default:
      break;
  }
  try {
    return invert_map(f)(r);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotInvertible) throw;
  }
  if (R->is_finite()) {
    const std::uint64_t n = *R->cardinality();
    for (std::uint64_t i = 0; i < n; ++i) {
      RingElement x = R->element_at(i);
      if (R->equal(f(x), r)) return x;
    }
    return std::nullopt;
  }
  throw Error(ErrorCode::PreimageUnavailable, "cannot search preimages of " + f.describe() + " on " +
                                                  R->descriptor().to_string());
}

std::optional<RingElement> preimage_power(const AdditiveMap& f, std::size_t n, const RingElement& r) {
  std::optional<RingElement> x = r;
  for (std::size_t i = 0; i < n && x; ++i) x = preimage(f, *x);
  return x;
}

// ---------------------------------------------------------------------------
// pi calculus
// ---------------------------------------------------------------------------

std::vector<std::string> pi_words(long i, long m) {
  std::vector<std::string> out;
  if (m < 0 || i < 0 || i > m) return out;
  std::string word;
  std::function<void(long, long)> build = [&](long sigmas, long deltas) {
    if (sigmas == 0 && deltas == 0) {
      out.push_back(word);
      return;
    }
    if (sigmas > 0) {
      word.push_back('s');
      build(sigmas - 1, deltas);
      word.pop_back();
    }
    if (deltas > 0) {
      word.push_back('d');
      build(sigmas, deltas - 1);
      word.pop_back();
    }
  };
  build(i, m - i);
  return out;
}

std::string format_word(const std::string& word) {
  if (word.empty()) return "id";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0) out += "∘";
    out += word[k] == 's' ? "σ" : "δ";
  }
  return out;
}

std::vector<RingElement> pi_row(const AdditiveMap& sigma, const AdditiveMap& delta, std::size_t m,
                                const RingElement& s) {
  const Ring& R = *sigma.ring();
  R.require_owned(s);
  if (delta.kind() == MapKind::Zero) {
    std::vector<RingElement> row(m + 1, R.zero());
    RingElement top = s;
    if (sigma.kind() != MapKind::Identity)
      for (std::size_t k = 0; k < m; ++k) top = sigma(top);
    row[m] = top;
    return row;
  }
  std::vector<RingElement> row{s};
  for (std::size_t level = 1; level <= m; ++level) {
    std::vector<RingElement> next(level + 1, R.zero());
    for (std::size_t i = 0; i <= level; ++i) {
      RingElement acc = R.zero();
      if (i >= 1) acc = sigma(row[i - 1]);
      if (i < level) acc = R.add(acc, delta(row[i]));
      next[i] = acc;
    }
    row = std::move(next);
  }
  return row;
}

RingElement pi_map(const AdditiveMap& sigma, const AdditiveMap& delta, long i, long m, const RingElement& s,
                   PiStrategy strategy) {
  if (!same_ring(*sigma.ring(), *delta.ring()))
    throw Error(ErrorCode::OwnerMismatch, "sigma and delta act on different rings");
  const Ring& R = *sigma.ring();
  R.require_owned(s);
  if (m < 0) throw Error(ErrorCode::ContractViolation, "pi_i^m needs m >= 0");
  if (i < 0 || i > m) return R.zero();
  if (strategy == PiStrategy::Recursion) return pi_row(sigma, delta, static_cast<std::size_t>(m), s)[static_cast<std::size_t>(i)];
  RingElement acc = R.zero();
  for (const auto& word : pi_words(i, m)) {
    RingElement v = s;
    for (auto it = word.rbegin(); it != word.rend(); ++it) v = *it == 's' ? sigma(v) : delta(v);
    acc = R.add(acc, v);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Law checks
// ---------------------------------------------------------------------------

std::string law_name(MapLaw law) {
  switch (law) {
    case MapLaw::Unital: return "unital";
    case MapLaw::Additive: return "additive";
    case MapLaw::SigmaDerivation: return "sigma_derivation";
    case MapLaw::SigmaDerivationPrinted: return "sigma_derivation_printed";
    case MapLaw::Endomorphism: return "endomorphism";
    case MapLaw::Involution: return "involution";
    case MapLaw::Anticommute: return "anticommute";
  }
  return "?";
}

SampleSet sample_elements(const Ring& ring, const SampleBudget& budget) {
  using Mode = SampleBudget::Mode;
  SampleSet set;
  const auto n = ring.cardinality();
  const bool small = n && *n <= budget.exhaustive_limit;
  if (budget.mode == Mode::Exhaustive || (budget.mode == Mode::Auto && small)) {
    if (!n) throw Error(ErrorCode::UndefinedForKind, "exhaustive sampling of infinite ring " + ring.descriptor().to_string());
    for (std::uint64_t i = 0; i < *n; ++i) set.elements.push_back(ring.element_at(i));
    set.exhaustive = true;
    set.structured = set.elements.size();
    return set;
  }
  if (budget.mode != Mode::Sampled && ring.dimension() && ring.base_field()) {
    set.elements = ring.basis();
    set.structured = set.elements.size();
  } else if (budget.mode != Mode::Sampled) {
    set.elements = {ring.one()};
    set.structured = 1;
  }
  if (budget.mode == Mode::Basis) return set;
  Rng rng(budget.seed);
  for (std::size_t i = 0; i < budget.samples; ++i) set.elements.push_back(ring.random(rng));
  return set;
}

Report LawReport::to_report() const {
  Report report("law " + law_name(law));
  report.add("law", law_name(law));
  report.add("checked", static_cast<unsigned long long>(checked));
  report.add("exhaustive", exhaustive);
  report.add("seed", static_cast<unsigned long long>(seed));
  report.add("passed", passed());
  report.add("violations", static_cast<unsigned long long>(violations.size()));
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    std::string inputs;
    for (std::size_t k = 0; k < v.inputs.size(); ++k) inputs += (k ? "; " : "") + v.inputs[k].to_string();
    const std::string key = "violation." + std::to_string(i + 1);
    report.add(key + ".inputs", inputs);
    report.add(key + ".lhs", v.lhs.to_string());
    report.add(key + ".rhs", v.rhs.to_string());
    if (!v.detail.empty()) report.add(key + ".detail", v.detail);
  }
  return report;
}

LawReport check_map_laws(const AdditiveMap& sigma, const AdditiveMap& delta, MapLaw law, const SampleBudget& budget,
                         std::size_t max_violations) {
  if (!same_ring(*sigma.ring(), *delta.ring()))
    throw Error(ErrorCode::OwnerMismatch, "sigma and delta act on different rings");
  const Ring& R = *sigma.ring();
  LawReport report;
  report.law = law;
  report.seed = budget.seed;

  auto expect = [&](std::vector<RingElement> inputs, const RingElement& lhs, const RingElement& rhs, std::string detail) {
    ++report.checked;
    if (R.equal(lhs, rhs) || report.violations.size() >= max_violations) return;
    report.violations.push_back({std::move(inputs), lhs, rhs, std::move(detail)});
  };

  if (law == MapLaw::Unital) {
    report.exhaustive = true;
    expect({R.one()}, sigma(R.one()), R.one(), "sigma(1) = 1");
    expect({R.one()}, delta(R.one()), R.zero(), "delta(1) = 0");
    return report;
  }

  const SampleSet set = sample_elements(R, budget);
  report.exhaustive = set.exhaustive;
  const auto& E = set.elements;

  auto single = [&](const std::function<void(const RingElement&)>& body) {
    for (const auto& a : E) body(a);
  };
  auto pairs = [&](const std::function<void(const RingElement&, const RingElement&)>& body) {
    for (std::size_t i = 0; i < set.structured; ++i)
      for (std::size_t j = 0; j < set.structured; ++j) body(E[i], E[j]);
    for (std::size_t i = set.structured; i + 1 < E.size(); ++i) body(E[i], E[i + 1]);
  };

  switch (law) {
    case MapLaw::Unital:
      break;
    case MapLaw::Additive:
      pairs([&](const RingElement& r, const RingElement& s) {
        expect({r, s}, sigma(R.add(r, s)), R.add(sigma(r), sigma(s)), "sigma additive");
        expect({r, s}, delta(R.add(r, s)), R.add(delta(r), delta(s)), "delta additive");
      });
      break;
    case MapLaw::SigmaDerivation:
      pairs([&](const RingElement& r, const RingElement& s) {
        expect({r, s}, delta(R.mul(r, s)), R.add(R.mul(sigma(r), delta(s)), R.mul(delta(r), s)), "");
      });
      break;
    case MapLaw::SigmaDerivationPrinted:
      pairs([&](const RingElement& r, const RingElement& s) {
        expect({r, s}, sigma(R.mul(r, s)), R.add(R.mul(sigma(r), delta(s)), R.mul(delta(r), s)), "");
      });
      break;
    case MapLaw::Endomorphism:
      pairs([&](const RingElement& r, const RingElement& s) {
        expect({r, s}, sigma(R.mul(r, s)), R.mul(sigma(r), sigma(s)), "");
      });
      break;
    case MapLaw::Involution:
      single([&](const RingElement& a) { expect({a}, sigma(sigma(a)), a, "sigma(sigma(a)) = a"); });
      pairs([&](const RingElement& a, const RingElement& b) {
        expect({a, b}, sigma(R.mul(a, b)), R.mul(sigma(b), sigma(a)), "sigma(ab) = sigma(b) sigma(a)");
      });
      break;
    case MapLaw::Anticommute:
      single([&](const RingElement& r) { expect({r}, R.add(sigma(delta(r)), delta(sigma(r))), R.zero(), ""); });
      break;
  }
  return report;
}

}  // namespace gnoe
