#include "mideal/primes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mideal {

MonomialPrime::MonomialPrime(Ring ring, std::vector<int> vars)
    : ring_(std::move(ring)), vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
  if (vars_.empty())
    throw PreconditionError("monomial prime needs a non-empty variable set");
  if (vars_.front() < 0 || vars_.back() >= ring_.var_count())
    throw PreconditionError("monomial prime: variable index out of range");
}

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<Monomial> gens;
  gens.reserve(vars_.size());
  for (int v : vars_)
    gens.push_back(Monomial::var_power(ring_.var_count(), v));
  return MonomialIdeal(ring_, std::move(gens));
}

std::string MonomialPrime::str() const {
  std::string out = "(";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i)
      out += ", ";
    out += ring_.name(vars_[i]);
  }
  return out + ")";
}

bool MonomialPrime::operator==(const MonomialPrime& other) const {
  require_same_ring(ring_, other.ring_, "prime equals");
  return vars_ == other.vars_;
}

bool MonomialPrime::operator<(const MonomialPrime& other) const {
  if (vars_.size() != other.vars_.size())
    return vars_.size() < other.vars_.size();
  return vars_ < other.vars_;
}

IrreducibleComponent::IrreducibleComponent(Ring ring, std::vector<Exponent> powers)
    : ring_(std::move(ring)), powers_(std::move(powers)) {
  if (static_cast<int>(powers_.size()) != ring_.var_count())
    throw RingMismatchError("irreducible component: arity mismatch");
  bool positive = false;
  for (Exponent p : powers_) {
    if (p < 0)
      throw PreconditionError("irreducible component: negative power");
    positive = positive || p > 0;
  }
  if (!positive)
    throw PreconditionError("irreducible component needs a positive entry");
}

MonomialPrime IrreducibleComponent::radical() const {
  std::vector<int> vars;
  for (size_t i = 0; i < powers_.size(); ++i)
    if (powers_[i] > 0)
      vars.push_back(static_cast<int>(i));
  return MonomialPrime(ring_, std::move(vars));
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Monomial> gens;
  for (size_t i = 0; i < powers_.size(); ++i)
    if (powers_[i] > 0)
      gens.push_back(Monomial::var_power(ring_.var_count(), static_cast<int>(i), powers_[i]));
  return MonomialIdeal(ring_, std::move(gens));
}

std::string IrreducibleComponent::str() const {
  std::string out = "(";
  bool first = true;
  for (size_t i = 0; i < powers_.size(); ++i) {
    if (powers_[i] == 0)
      continue;
    if (!first)
      out += ", ";
    first = false;
    out += ring_.name(static_cast<int>(i));
    if (powers_[i] > 1) {
      out += '^';
      out += std::to_string(powers_[i]);
    }
  }
  return out + ")";
}

bool IrreducibleComponent::operator==(const IrreducibleComponent& other) const {
  require_same_ring(ring_, other.ring_, "component equals");
  return powers_ == other.powers_;
}

bool IrreducibleComponent::operator<(const IrreducibleComponent& other) const {
  return powers_ < other.powers_;
}

bool AssReport::contains_prime(const MonomialPrime& p) const {
  return std::find(primes.begin(), primes.end(), p) != primes.end();
}

bool AssReport::same_primes(const AssReport& other) const {
  if (primes.size() != other.primes.size())
    return false;
  for (size_t i = 0; i < primes.size(); ++i)
    if (!(primes[i] == other.primes[i]))
      return false;
  return true;
}

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero())
    throw PreconditionError(std::string(op) + ": zero ideal");
  if (ideal.is_unit())
    throw PreconditionError(std::string(op) + ": unit ideal");
}

/// Collects the pure-power leaves of the splitting recursion. Subproblems
/// repeat heavily (the same pure power gets adjoined along many branches),
/// so results are memoized on the canonical generator matrix.
class SplitCollector {
public:
  using Key = std::vector<std::vector<Exponent>>;

  explicit SplitCollector(const Ring& ring) : ring_(ring) {}

  void run(const MonomialIdeal& ideal) { decompose(ideal); }

  std::set<std::vector<Exponent>> take_components() { return std::move(components_); }

private:
  const std::set<std::vector<Exponent>>* decompose(const MonomialIdeal& ideal) {
    Key key;
    key.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
      key.push_back(g.exponents());
    auto hit = memo_.find(key);
    if (hit != memo_.end())
      return &hit->second;

    std::set<std::vector<Exponent>> local;
    const Monomial* mixed = nullptr;
    for (const auto& g : ideal.generators()) {
      if (g.support_size() >= 2) {
        mixed = &g;
        break;
      }
    }
    if (mixed == nullptr) {
      // Every generator is a pure power: the ideal is irreducible.
      std::vector<Exponent> powers(static_cast<size_t>(ring_.var_count()), 0);
      for (const auto& g : ideal.generators())
        for (int v : g.support())
          powers[static_cast<size_t>(v)] = g.exponent(v);
      components_.insert(powers);
      local.insert(std::move(powers));
    } else {
      const int i = mixed->support().front();
      const Monomial pure = Monomial::var_power(ring_.var_count(), i, mixed->exponent(i));
      const Monomial rest = mixed->colon_by(pure);
      for (const Monomial& extra : {pure, rest}) {
        auto gens = ideal.generators();
        gens.push_back(extra);
        const auto* sub = decompose(MonomialIdeal(ring_, std::move(gens)));
        local.insert(sub->begin(), sub->end());
      }
    }
    auto [it, _] = memo_.emplace(std::move(key), std::move(local));
    return &it->second;
  }

  const Ring& ring_;
  std::set<std::vector<Exponent>> components_;
  std::map<Key, std::set<std::vector<Exponent>>> memo_;
};

/// Q_a contained in Q_b for irreducible ideals given by power vectors:
/// every generator x_i^{a_i} of Q_a must lie in Q_b, i.e. b_i > 0 and
/// b_i <= a_i.
bool component_subset(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && !(b[i] > 0 && b[i] <= a[i]))
      return false;
  return true;
}

} // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "irreducible decomposition");
  SplitCollector collector(ideal.ring());
  collector.run(ideal);
  std::set<std::vector<Exponent>> raw = collector.take_components();

  // A component is redundant exactly when it contains another component:
  // for irreducible Q_j, the intersection of the others sits inside Q_j
  // iff some single Q_l does (take the monomial with exponents a_i - 1 on
  // supp(Q_j) and large elsewhere). Keeping the containment-minimal
  // components therefore yields the irredundant decomposition.
  std::vector<std::vector<Exponent>> all(raw.begin(), raw.end());
  std::vector<IrreducibleComponent> out;
  for (size_t j = 0; j < all.size(); ++j) {
    bool redundant = false;
    for (size_t l = 0; l < all.size() && !redundant; ++l)
      redundant = l != j && component_subset(all[l], all[j]);
    if (!redundant)
      out.emplace_back(ideal.ring(), all[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AssReport associated_primes_decomp(const MonomialIdeal& ideal) {
  auto components = irreducible_decomposition(ideal);
  std::set<MonomialPrime> primes;
  for (const auto& c : components)
    primes.insert(c.radical());
  return AssReport{ideal, std::vector<MonomialPrime>(primes.begin(), primes.end()),
                   AssMethod::Decomposition};
}

MonomialIdeal localize(const MonomialIdeal& ideal, const std::vector<int>& vars) {
  if (vars.empty())
    throw PreconditionError("localize: empty variable subset");
  std::vector<int> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() < 0 || sorted.back() >= ideal.ring().var_count())
    throw PreconditionError("localize: variable index out of range");

  Ring sub = ideal.ring().restricted_to(sorted);
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> exps;
    exps.reserve(sorted.size());
    for (int v : sorted)
      exps.push_back(g.exponent(v));
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(std::move(sub), std::move(gens));
}

MaximalIdealWitness maximal_ideal_associated(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "maximal_ideal_associated");
  const int n = ideal.ring().var_count();
  if (static_cast<int>(support(ideal).size()) != n)
    return {}; // a variable missing from every generator cannot enter (I : w)

  const std::vector<Exponent> max = ideal.max_exponents();
  // (I : w) equals the maximal ideal iff w is outside I and x_i * w is
  // inside for every i; maximality of m makes the two-sided check collapse
  // to this. Enumerate w with 0 <= w_i <= M_i - 1.
  std::vector<Exponent> w(static_cast<size_t>(n), 0);
  std::vector<Exponent> shifted(static_cast<size_t>(n), 0);
  for (;;) {
    if (!ideal.contains(w)) {
      bool all_in = true;
      for (int i = 0; i < n && all_in; ++i) {
        shifted = w;
        ++shifted[static_cast<size_t>(i)];
        all_in = ideal.contains(shifted);
      }
      if (all_in)
        return {true, Monomial(w)};
    }
    int pos = 0;
    while (pos < n && w[static_cast<size_t>(pos)] == max[static_cast<size_t>(pos)] - 1) {
      w[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n)
      return {};
    ++w[static_cast<size_t>(pos)];
  }
}

AssReport associated_primes_witness(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "associated primes");
  const std::vector<int> supp = support(ideal);
  const size_t s = supp.size();
  if (s > 30)
    throw CapExceededError("associated primes: support too large for subset scan");

  std::set<MonomialPrime> primes;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << s); ++mask) {
    std::vector<int> vars;
    for (size_t b = 0; b < s; ++b)
      if (mask & (std::uint64_t(1) << b))
        vars.push_back(supp[b]);
    MonomialIdeal local = localize(ideal, vars);
    if (local.is_unit() || local.is_zero())
      continue;
    if (maximal_ideal_associated(local).associated)
      primes.insert(MonomialPrime(ideal.ring(), vars));
  }
  return AssReport{ideal, std::vector<MonomialPrime>(primes.begin(), primes.end()),
                   AssMethod::WitnessSearch};
}

AssReport associated_primes(const MonomialIdeal& ideal, AssMethod method) {
  return method == AssMethod::WitnessSearch ? associated_primes_witness(ideal)
                                            : associated_primes_decomp(ideal);
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "alexander dual");
  if (!ideal.is_squarefree())
    throw PreconditionError("alexander dual: input must be square-free");

  // Berge expansion: fold the variable primes of the generator supports
  // into the running intersection, pruning non-minimal transversals at
  // every step (intersect minimalizes).
  MonomialIdeal dual = MonomialIdeal::unit(ideal.ring());
  for (const auto& g : ideal.generators()) {
    MonomialPrime edge(ideal.ring(), g.support());
    dual = intersect(dual, edge.to_ideal());
  }
  return dual;
}

} // namespace mideal
