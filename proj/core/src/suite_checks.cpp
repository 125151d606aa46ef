#include "suite_checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "lambda_lab/ev_periodic.hpp"
#include "lambda_lab/powerset_ring.hpp"
#include "lambda_lab/scheme_functor.hpp"
#include "lambda_lab/spectrum.hpp"
#include "lambda_lab/tensor_local.hpp"

namespace lambda_lab::detail {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::mt19937_64 suite_rng(const SuiteConfig& config, const std::string& name) {
  return std::mt19937_64(config.seed ^ fnv1a(name));
}

/// Element pairs to scan: all of them when |Λ|² fits the budgeted cap,
/// otherwise a seeded sample. Returns whether the scan is exhaustive.
bool for_element_pairs(const Ring& ring, std::uint64_t cap, std::mt19937_64& rng,
                       const std::function<void(const ProdElem&, const ProdElem&)>& body) {
  std::uint64_t n = ring->cardinality();
  if (n * n <= cap) {
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) body(ring->element_at(i), ring->element_at(j));
    return true;
  }
  for (std::uint64_t t = 0; t < cap; ++t)
    body(ring->random_element(rng), ring->random_element(rng));
  return false;
}

CheckReport algebra_suite(const SuiteConfig& config) {
  CheckReport report;
  Ring ring = config.ring();
  std::string inst = ring->describe();
  std::mt19937_64 rng = suite_rng(config, "algebra");
  std::uint64_t cap = static_cast<std::uint64_t>(config.budget) * 16;

  // scalar layer: field laws, exhaustive per distinct field
  std::set<const FieldSpec*> specs;
  for (int i = 0; i < ring->size(); ++i) specs.insert(ring->field(i));
  for (const FieldSpec* k : specs) {
    bool laws = true;
    int q = k->order();
    for (int a = 0; a < q && laws; ++a)
      for (int b = 0; b < q && laws; ++b)
        for (int c = 0; c < q && laws; ++c) {
          FieldElem fa = k->element(a), fb = k->element(b), fc = k->element(c);
          laws = (fa + fb) + fc == fa + (fb + fc) && (fa * fb) * fc == fa * (fb * fc) &&
                 fa * (fb + fc) == fa * fb + fa * fc && fa + fb == fb + fa && fa * fb == fb * fa;
        }
    for (int a = 1; a < q && laws; ++a) {
      FieldElem fa = k->element(a);
      laws = fa * fa.inverse() == k->one() && fa.pow(q - 1) == k->one();
    }
    report.add("field.laws", "field axioms hold exhaustively", "F_" + k->name(), laws);
    report.add("field.frobenius", "a^q = a for every element", "F_" + k->name(),
               k->frobenius_fixed());
  }

  // Su is multiplicative and additively squeezed
  bool su_mul = true, su_add = true;
  bool exhaustive = for_element_pairs(ring, cap, rng, [&](const ProdElem& f, const ProdElem& g) {
    if (!((f * g).support() == (f.support() & g.support()))) su_mul = false;
    Subset sum = (f + g).support();
    if (!((f.support() ^ g.support()).subset_of(sum) &&
          sum.subset_of(f.support() | g.support())))
      su_add = false;
  });
  std::string scan = exhaustive ? inst : inst + " (sampled)";
  report.add("support.multiplicative", "Su(fg) = Su(f) ∩ Su(g)", scan, su_mul);
  report.add("support.additive_bounds", "Su(f)+Su(g) ⊆ Su(f+g) ⊆ Su(f)∪Su(g)", scan, su_add);

  // units are exactly the full-support elements, with coordinatewise inverses
  bool units_ok = true;
  std::uint64_t n = ring->cardinality();
  std::uint64_t unit_scan = std::min<std::uint64_t>(n, cap);
  for (std::uint64_t r = 0; r < unit_scan && units_ok; ++r) {
    ProdElem f = n <= cap ? ring->element_at(r) : ring->random_element(rng);
    if (f.is_unit()) {
      units_ok = f.support().full() && f * f.inverse() == ring->one();
    } else {
      // the best inverse candidate only reaches the support indicator
      units_ok = !f.support().full() && !(f * f.pseudo_inverse() == ring->one());
    }
  }
  report.add("units.characterization", "f is invertible iff Su(f) = X", scan, units_ok);

  // deltas: orthogonal idempotents summing to 1
  bool deltas_ok = true;
  ProdElem sum = ring->zero();
  for (int x = 0; x < ring->size(); ++x) {
    ProdElem dx = ring->delta(x);
    deltas_ok = deltas_ok && dx * dx == dx;
    for (int y = 0; y < ring->size(); ++y)
      if (x != y) deltas_ok = deltas_ok && dx * ring->delta(y) == ring->zero();
    sum = sum + dx;
  }
  report.add("delta.orthogonal_idempotents", "Δ_x are orthogonal idempotents with ΣΔ_x = 1",
             inst, deltas_ok && sum == ring->one());

  // principal ideals: the support test matches the multiples oracle
  bool principal_ok = true, witness_ok = true;
  std::uint64_t f_scan = std::min<std::uint64_t>(n, 256);
  for (std::uint64_t rf = 0; rf < f_scan && principal_ok; ++rf) {
    ProdElem f = n <= 256 ? ring->element_at(rf) : ring->random_element(rng);
    SupportIdeal ideal = SupportIdeal::principal(f);
    std::set<std::uint64_t> multiples;
    for (std::uint64_t rr = 0; rr < n; ++rr)
      multiples.insert(ring->rank_of(ring->element_at(rr) * f));
    for (std::uint64_t rh = 0; rh < n && principal_ok; ++rh) {
      ProdElem h = ring->element_at(rh);
      principal_ok = ideal.contains(h) == (multiples.count(rh) > 0);
      if (ideal.contains(h) && !(division_witness(h, f) * f == h)) witness_ok = false;
    }
  }
  report.add("ideal.principal_membership",
             "(f) = {h : Su(h) ⊆ Su(f)} agrees with the exhaustive multiples oracle",
             n <= 256 ? inst : inst + " (sampled f)", principal_ok);
  report.add("ideal.division_witness", "members factor as h = h'·f with h' = h·f^{-1} on Su(h)",
             n <= 256 ? inst : inst + " (sampled f)", witness_ok);

  // (f) = (f^k): supports are stable under powers
  bool powers_ok = true;
  for (std::uint64_t rf = 0; rf < std::min<std::uint64_t>(n, 128) && powers_ok; ++rf) {
    ProdElem f = ring->element_at(rf);
    for (int k = 1; k <= 4 && powers_ok; ++k) powers_ok = ideal_equal(f, f.pow(k));
  }
  report.add("ideal.radical_powers", "(f) = (f^k) for all k ≥ 1", inst, powers_ok);

  // maximal ideals: f = f(1-Δ_x) for members, and 1-Δ_x generates
  bool maximal_ok = true;
  for (int x = 0; x < ring->size() && maximal_ok; ++x) {
    SupportIdeal mx = SupportIdeal::maximal(ring, x);
    ProdElem gen = ring->one() - ring->delta(x);
    maximal_ok = mx.contains(gen);
    for (const ProdElem& f : mx.members())
      if (!(f == f * gen)) maximal_ok = false;
  }
  report.add("ideal.maximal_generator", "𝔪_x = (1-Δ_x) and f = f(1-Δ_x) on members", inst,
             maximal_ok);

  // quotients: kernel of the projection is exactly (f)
  bool quotient_ok = true;
  for (std::uint64_t rf = 0; rf < std::min<std::uint64_t>(n, 64) && quotient_ok; ++rf) {
    ProdElem f = ring->element_at(rf);
    Projection q = quotient_by(f);
    SupportIdeal ideal = SupportIdeal::principal(f);
    for (std::uint64_t rh = 0; rh < n && quotient_ok; ++rh) {
      ProdElem h = ring->element_at(rh);
      bool in_kernel = q.apply(h) == q.target->zero();
      quotient_ok = in_kernel == ideal.contains(h);
    }
  }
  report.add("ideal.quotient_kernel", "Λ/(f) ≅ ∏_{x∉Su(f)} K_x with kernel (f)", inst,
             quotient_ok);

  // disjoint-support splitting is a ring isomorphism
  bool split_ok = true;
  {
    std::uint64_t checked = 0;
    for (std::uint64_t fb = 0; fb < subset_space_size(ring->size()) && split_ok; ++fb)
      for (std::uint64_t gb = 0; gb < subset_space_size(ring->size()); ++gb) {
        Subset sf(fb, ring->size()), sg(gb, ring->size());
        if (!(sf & sg).empty()) continue;
        SplitWitness w = split_disjoint(ring->indicator(sf), ring->indicator(sg));
        std::uint64_t m = w.joint->cardinality();
        if (m * m > 4096 || ++checked > 64) continue;
        std::set<std::pair<std::uint64_t, std::uint64_t>> images;
        for (std::uint64_t i = 0; i < m && split_ok; ++i) {
          auto [a, b] = w.forward(w.joint->element_at(i));
          images.insert({w.left->rank_of(a), w.right->rank_of(b)});
          if (!(w.backward(a, b) == w.joint->element_at(i))) split_ok = false;
          for (std::uint64_t j = 0; j < m && split_ok; ++j) {
            ProdElem u = w.joint->element_at(i), v = w.joint->element_at(j);
            auto [sa, sb] = w.forward(u + v);
            auto [ma, mb] = w.forward(u * v);
            auto [ua, ub] = w.forward(u);
            auto [va, vb] = w.forward(v);
            split_ok = sa == ua + va && sb == ub + vb && ma == ua * va && mb == ub * vb;
          }
        }
        if (images.size() != m) split_ok = false;
      }
  }
  report.add("split.disjoint", "∏_{Su(f)∪Su(g)} K_x ≅ R × R' for disjoint supports", inst,
             split_ok);

  // the support-ideal lattice is the powerset lattice
  bool lattice_ok = true;
  for (std::uint64_t ab = 0; ab < subset_space_size(ring->size()) && lattice_ok; ++ab)
    for (std::uint64_t bb = 0; bb < subset_space_size(ring->size()); ++bb) {
      SupportIdeal ia(ring, Subset(ab, ring->size()));
      SupportIdeal ib(ring, Subset(bb, ring->size()));
      lattice_ok = ia.sum(ib).support() == (ia.support() | ib.support()) &&
                   ia.intersect(ib).support() == (ia.support() & ib.support());
    }
  report.add("ideal.lattice", "support ideals form the powerset lattice of X", inst, lattice_ok);

  // Boolean ring over the same labels: axioms and the characteristic iso
  PsRing ps = PowersetRing::make(ring->labels());
  bool bool_ok = true, char_ok = true;
  std::vector<SetElem> sets = ps->elements();
  if (sets.size() <= 64) {
    for (const SetElem& a : sets)
      for (const SetElem& b : sets) {
        bool_ok = bool_ok && a + a == ps->empty_set() && a * a == a &&
                  a * ps->whole_set() == a && a + b == b + a && a * b == b * a;
        char_ok = char_ok && char_function(a + b) == char_function(a) + char_function(b) &&
                  char_function(a * b) == char_function(a) * char_function(b);
      }
    std::set<std::uint64_t> images;
    Ring cr = ps->char_ring();
    for (const SetElem& a : sets) images.insert(cr->rank_of(char_function(a)));
    char_ok = char_ok && images.size() == sets.size() && sets.size() == cr->cardinality();
  }
  report.add("powerset.boolean_laws", "𝒫(X) is a Boolean ring: A+A = 0 and A·A = A", inst,
             bool_ok);
  report.add("powerset.char_iso", "A ↦ χ_A is a ring isomorphism onto Fun(X, F_2)", inst,
             char_ok);
  return report;
}

CheckReport ideals_suite(const SuiteConfig& config) {
  CheckReport report;
  Ring ring = config.ring();
  std::string inst = ring->describe();
  if (ring->cardinality() > 4096) {
    report.add_partial("oracle.size", "ideal oracle applies up to |Λ| ≤ 4096", inst,
                       "ring too large; suite skipped");
    return report;
  }

  IdealOracleResult oracle = enumerate_ideals(ring);
  report.add("oracle.count", "a finite product of fields has exactly 2^|X| ideals", inst,
             oracle.ideals.size() == subset_space_size(ring->size()));

  bool all_support = true, all_radical = true;
  for (size_t i = 0; i < oracle.ideals.size(); ++i) {
    if (!oracle.is_support_ideal(static_cast<int>(i))) all_support = false;
    if (!oracle.is_radical(static_cast<int>(i))) all_radical = false;
  }
  report.add("oracle.support_shape", "every ideal is a support ideal {h : Su(h) ⊆ S}", inst,
             all_support);
  report.add("oracle.radical", "every ideal is a radical ideal", inst, all_radical);

  std::set<int> expected;
  for (int x = 0; x < ring->size(); ++x)
    expected.insert(oracle.find(SupportIdeal::maximal(ring, x)));
  std::set<int> primes(oracle.primes.begin(), oracle.primes.end());
  std::set<int> maximals(oracle.maximals.begin(), oracle.maximals.end());
  report.add("oracle.primes_maximals", "primes = maximals = {𝔪_x : x ∈ X}", inst,
             primes == maximals && maximals == expected && !expected.count(-1));

  // Zariski basis laws, cross-checked against the oracle's D(f)
  bool zariski_ok = true;
  std::uint64_t n = ring->cardinality();
  if (n <= 256) {
    for (std::uint64_t r = 0; r < n && zariski_ok; ++r)
      for (std::uint64_t s = 0; s < n; ++s) {
        BasicOpen df = basic_open(ring->element_at(r));
        BasicOpen dg = basic_open(ring->element_at(s));
        BasicOpen dfg = basic_open(ring->element_at(r) * ring->element_at(s));
        if (!(dfg.points == (df.points & dg.points))) {
          zariski_ok = false;
          break;
        }
      }
    zariski_ok = zariski_ok && basic_open(ring->one()).points.full() &&
                 basic_open(ring->zero()).points.empty();
  }
  report.add("zariski.basis_laws", "D(f)∩D(g) = D(fg), D(1) = Spec, D(0) = ∅", inst, zariski_ok);
  return report;
}

CheckReport tensor_suite(const SuiteConfig& config) {
  CheckReport report;
  Ring ring = config.ring();
  std::string inst = ring->describe();

  // structural laws of the kill sets
  bool unit_law = true, comm_assoc = true;
  for (std::uint64_t ab = 0; ab < subset_space_size(ring->size()); ++ab) {
    QuotAlgebra a = QuotAlgebra::surviving(ring, Subset(ab, ring->size()));
    unit_law = unit_law && tensor(a, QuotAlgebra::whole(ring)) == a;
    for (std::uint64_t bb = 0; bb < subset_space_size(ring->size()); ++bb) {
      QuotAlgebra b = QuotAlgebra::surviving(ring, Subset(bb, ring->size()));
      comm_assoc = comm_assoc && tensor(a, b) == tensor(b, a) &&
                   tensor(a, b).kill() == (a.kill() | b.kill());
    }
  }
  report.add("tensor.unit", "A ⊗ Λ = A", inst, unit_law);
  report.add("tensor.kill_union", "kill(A⊗B) = kill(A) ∪ kill(B), commutatively", inst,
             comm_assoc);

  // structural tensor vs the Smith-normal-form oracle
  bool oracle_ok = true;
  bool truncated = false;
  int checked = 0;
  std::string why;
  for (std::uint64_t ab = 0; ab < subset_space_size(ring->size()) && oracle_ok && !truncated;
       ++ab)
    for (std::uint64_t bb = 0; bb < subset_space_size(ring->size()); ++bb) {
      QuotAlgebra a = QuotAlgebra::surviving(ring, Subset(ab, ring->size()));
      QuotAlgebra b = QuotAlgebra::surviving(ring, Subset(bb, ring->size()));
      if (a.cardinality() * b.cardinality() > 256) continue;
      if (checked >= config.budget) {
        truncated = true;
        break;
      }
      ++checked;
      if (!tensor_matches_oracle(a, b, &why)) {
        oracle_ok = false;
        why += " at A=" + ring->subset_to_string(a.survivors()) +
               " B=" + ring->subset_to_string(b.survivors());
        break;
      }
    }
  report.add("tensor.oracle_iso",
             "the structural tensor is ring-isomorphic to the relation-matrix oracle",
             inst + " (" + std::to_string(checked) + " pairs)", oracle_ok, why);
  if (truncated)
    report.add_partial("tensor.budget", "survivor pairs beyond the case cap were not checked",
                       inst, "budget " + std::to_string(config.budget) + " reached");

  // disjoint survivors tensor to the zero ring
  bool disjoint_ok = true;
  for (std::uint64_t ab = 0; ab < subset_space_size(ring->size()) && disjoint_ok; ++ab) {
    Subset sa(ab, ring->size());
    QuotAlgebra a = QuotAlgebra::surviving(ring, sa);
    QuotAlgebra b = QuotAlgebra::surviving(ring, sa.complement());
    disjoint_ok = tensor(a, b).cardinality() == 1;
  }
  report.add("tensor.disjoint_zero", "A ⊗ B = 0 when the survivors are disjoint", inst,
             disjoint_ok);

  // powerset corollary instances over F_2
  if (ring->size() <= 6) {
    PsRing ps = PowersetRing::make(ring->labels());
    std::vector<SetElem> sets = ps->elements();
    for (const SetElem& a : sets) {
      report.merge(powerset_decomposition_suite(a, a.complement()));
      if (sets.size() <= 8)
        for (const SetElem& b : sets) report.merge(powerset_decomposition_suite(a, b));
    }
  } else {
    report.add_partial("powerset.tensor_meet",
                       "powerset decompositions checked on universes of ≤ 6 labels", inst,
                       "universe too large; skipped");
  }
  return report;
}

CheckReport localization_suite(const SuiteConfig& config) {
  CheckReport report;
  Ring ring = config.ring();
  std::string inst = ring->describe();
  std::mt19937_64 rng = suite_rng(config, "localization");

  bool lemma_ok = true;
  std::string detail;
  std::uint64_t n = ring->cardinality();
  std::uint64_t scan = std::min<std::uint64_t>(n, static_cast<std::uint64_t>(config.budget));
  bool exhaustive = scan == n && n <= 256;
  for (std::uint64_t r = 0; r < scan && lemma_ok; ++r) {
    ProdElem f = exhaustive ? ring->element_at(r) : ring->random_element(rng);
    LocalizationWitness w = check_localization_at_element(f);
    if (!w.ok()) {
      lemma_ok = false;
      detail = "f = " + f.to_string() + ": " + w.detail;
    }
  }
  report.add("localization.at_element", "Λ_f ≅ ∏_{x∈Su(f)} K_x by formal fractions",
             exhaustive ? inst : inst + " (sampled)", lemma_ok, detail);

  // localizing at {1} changes nothing; inverting 0 collapses everything
  FractionRing trivial = localize(ring, MultiplicativeSet::powers_of(ring->one()));
  bool trivial_ok = !trivial.is_zero_ring();
  std::set<std::uint64_t> classes;
  for (std::uint64_t r = 0; r < std::min<std::uint64_t>(n, 64); ++r) {
    ProdElem f = ring->element_at(r);
    for (std::uint64_t s = 0; s < std::min<std::uint64_t>(n, 64); ++s)
      if (trivial.equal(trivial.from(f), trivial.from(ring->element_at(s))) && r != s)
        trivial_ok = false;
  }
  report.add("localization.at_one", "inverting {1} is the identity", inst, trivial_ok);
  FractionRing collapsed = localize(ring, MultiplicativeSet::powers_of(ring->zero()));
  report.add("localization.at_zero", "inverting 0 gives the zero ring", inst,
             collapsed.is_zero_ring());

  report.merge(check_finite_localization(ring, config.seed, std::min(config.budget, 200)));
  return report;
}

CheckReport spectrum_suite(const SuiteConfig& config) {
  CheckReport report;
  Ring ring = config.ring();
  std::string inst = ring->describe();
  if (ring->cardinality() > 4096) {
    report.add_partial("finiteness.size", "spectrum suite applies up to |Λ| ≤ 4096", inst,
                       "ring too large; suite skipped");
    return report;
  }
  report.merge(finiteness_suite(ring));

  bool constant = true;
  for (int i = 1; i < ring->size(); ++i) constant = constant && ring->field(i) == ring->field(0);
  for (int x = 0; x < ring->size(); ++x) {
    ResidueFieldWitness w = constant ? residue_field(ring, SupportIdeal::maximal(ring, x))
                                     : residue_field_at(ring, x);
    report.add("residue.at_point",
               "R/𝔪_x is canonically isomorphic to K_x (coset enumeration)",
               inst + " x=" + ring->label(x),
               w.ok() && w.coset_count == static_cast<std::uint64_t>(ring->field(x)->order()));
  }
  if (constant) {
    bool frob = true;
    for (std::uint64_t r = 0; r < ring->cardinality() && frob; ++r) {
      ProdElem f = ring->element_at(r);
      frob = f.pow(ring->field(0)->order()) == f;
    }
    report.add("residue.frobenius", "f = f^q for every f ∈ Fun(X, F_q)", inst, frob);
  }
  return report;
}

CheckReport scheme_suite(const SuiteConfig& config) {
  CheckReport report;
  Ring ring = config.ring();
  std::string inst = ring->describe();

  if (ring->size() <= 6) {
    report.merge(check_sheaf(ring));
  } else {
    report.add_partial("sheaf.gluing", "sheaf axioms checked exhaustively up to |X| ≤ 4", inst,
                       "index set too large; skipped");
  }
  if (ring->cardinality() <= 1024) {
    report.merge(check_affine_iff_finite(ring));  // includes the eta morphism
  } else {
    report.add_partial("affine.finite", "spectrum comparison applies up to |Λ| ≤ 1024", inst,
                       "ring too large; skipped");
  }
  if (ring->size() <= 6) {
    report.merge(check_separated(ring));
  } else {
    report.add_partial("separated.surjective.structural",
                       "separatedness checked exhaustively up to |X| ≤ 5", inst,
                       "index set too large; skipped");
  }
  return report;
}

CheckReport duality_suite_runner(const SuiteConfig&) {
  std::vector<const FieldSpec*> fields = {FieldSpec::get(2), FieldSpec::get(3)};
  return duality_suite_all(3, fields);
}

CheckReport ev_periodic_suite(const SuiteConfig& config) {
  CheckReport report;
  const FieldSpec* k = FieldSpec::parse(config.fields.at(0));
  std::string inst = "field " + k->name();
  std::mt19937_64 rng = suite_rng(config, "ev_periodic");
  int trials = std::min(config.budget, 500);

  auto random_seq = [&](bool cofinite) {
    std::uniform_int_distribution<int> len_pre(0, 5), len_per(1, 6), elem(0, k->order() - 1),
        unit(1, k->order() - 1);
    std::vector<FieldElem> pre, per;
    int np = len_pre(rng), nq = len_per(rng);
    for (int i = 0; i < np; ++i) pre.push_back(k->element(elem(rng)));
    for (int i = 0; i < nq; ++i) per.push_back(k->element(cofinite ? unit(rng) : elem(rng)));
    return EvPeriodic::make(k, std::move(pre), std::move(per));
  };

  // canonical form: idempotent and value-preserving
  bool canonical_ok = true;
  for (int t = 0; t < trials && canonical_ok; ++t) {
    EvPeriodic f = random_seq(false);
    EvPeriodic rebuilt = EvPeriodic::make(k, f.preperiod(), f.period());
    canonical_ok = rebuilt == f;
    std::vector<FieldElem> pre = f.preperiod();
    std::vector<FieldElem> per;
    for (int rep = 0; rep < 3; ++rep)
      for (const FieldElem& e : f.period()) per.push_back(e);
    EvPeriodic padded = EvPeriodic::make(k, std::move(pre), std::move(per));
    std::uint64_t window = f.preperiod().size() + 3 * f.period().size() + 4;
    for (std::uint64_t i = 0; i <= window && canonical_ok; ++i)
      canonical_ok = padded.at(i) == f.at(i) && padded == f;
  }
  report.add("periodic.canonical", "canonicalization is idempotent and value-preserving", inst,
             canonical_ok);

  // arithmetic agrees with the pointwise window oracle; ring laws hold
  bool window_ok = true, ring_laws = true;
  for (int t = 0; t < trials && window_ok && ring_laws; ++t) {
    EvPeriodic f = random_seq(false), g = random_seq(false), h = random_seq(false);
    EvPeriodic sum = f + g, prod = f * g;
    std::uint64_t window =
        std::max(f.preperiod().size(), g.preperiod().size()) +
        2 * std::lcm(f.period().size(), g.period().size());
    for (std::uint64_t i = 0; i <= window && window_ok; ++i)
      window_ok = sum.at(i) == f.at(i) + g.at(i) && prod.at(i) == f.at(i) * g.at(i);
    ring_laws = (f + g) + h == f + (g + h) && (f * g) * h == f * (g * h) &&
                f * (g + h) == f * g + f * h && f + g == g + f && f * g == g * f &&
                f + EvPeriodic::zero(k) == f && f * EvPeriodic::one(k) == f;
  }
  report.add("periodic.window_oracle", "combine agrees with pointwise evaluation on a window",
             inst, window_ok);
  report.add("periodic.ring_laws", "eventually periodic sequences form a commutative ring",
             inst, ring_laws);

  // 𝔉 is an ideal, T is multiplicative, and support classes multiply
  bool ideal_ok = true, t_mult = true, class_mul = true;
  for (int t = 0; t < trials; ++t) {
    EvPeriodic fin1 = random_seq(false), fin2 = random_seq(false);
    auto finitize = [&](const EvPeriodic& f) {
      // zero period, random preperiod: a generic member of 𝔉
      std::vector<FieldElem> pre = f.preperiod();
      return EvPeriodic::make(k, std::move(pre), {k->zero()});
    };
    EvPeriodic a = finitize(fin1), b = finitize(fin2);
    EvPeriodic any = random_seq(false);
    if ((a + b).support_class() != SupportClass::finite ||
        (a * any).support_class() != SupportClass::finite)
      ideal_ok = false;
    EvPeriodic c1 = random_seq(true), c2 = random_seq(true);
    if ((c1 * c2).support_class() != SupportClass::cofinite) t_mult = false;
    SupportClass sc = (any * c1).support_class();
    if (any.support_class() == SupportClass::cofinite && sc != SupportClass::cofinite)
      class_mul = false;
    if (any.support_class() == SupportClass::finite && sc != SupportClass::finite)
      class_mul = false;
  }
  report.add("periodic.finite_ideal", "𝔉 is an ideal: closed under + and absorbing under ·",
             inst, ideal_ok);
  report.add("periodic.t_multiplicative", "T = {cofinite support} is a multiplicative set",
             inst, t_mult);
  report.add("periodic.class_multiplication", "Su(fg) = Su(f) ∩ Su(g) at the class level", inst,
             class_mul);

  // localization round-trips and the pseudo-inverse identity
  bool psi_phi = true, phi_psi = true, pseudo_ok = true;
  for (int t = 0; t < trials; ++t) {
    EvPeriodic f = random_seq(false);
    EvPeriodic g = random_seq(true);
    if (!mod_finite_equal(localize_fraction(f, EvPeriodic::one(k)), f)) psi_phi = false;
    if (!mod_finite_equal(localize_fraction(f * g, g), f)) phi_psi = false;
    EvPeriodic defect = EvPeriodic::one(k) - g * g.pseudo_inverse();
    if (defect.support_class() != SupportClass::finite) pseudo_ok = false;
  }
  report.add("periodic.psi_phi", "ψ∘φ is the identity on Λ/𝔉", inst, psi_phi);
  report.add("periodic.phi_psi", "φ∘ψ is the identity on fractions", inst, phi_psi);
  report.add("periodic.pseudo_inverse", "1 - g·g* has finite support for g ∈ T", inst,
             pseudo_ok);

  // Λ′ closure: closed exactly over F_2
  ClosureReport closure = lambda_prime_closure_test(k, std::min(config.budget * 10, 10000),
                                                    config.seed);
  if (k->order() == 2) {
    report.add("periodic.lambda_prime_closed",
               "Λ′ is closed under addition iff the field is F_2", inst, closure.closed,
               std::to_string(closure.cases_checked) + " cases");
  } else {
    std::string detail;
    if (closure.counterexample) {
      detail = "f = " + closure.counterexample->f.to_string() +
               ", g = " + closure.counterexample->g.to_string() +
               ", f+g = " + (closure.counterexample->f + closure.counterexample->g).to_string();
    }
    report.add("periodic.lambda_prime_counterexample",
               "Λ′ is not closed under addition over fields larger than F_2", inst,
               !closure.closed && closure.counterexample.has_value(), detail);
  }

  // the open question's decidable half: sequences killed by the canonical
  // map into T^{-1}Λ are exactly the finite-support ones, within this model
  bool kernel_ok = true;
  for (int t = 0; t < trials && kernel_ok; ++t) {
    EvPeriodic f = random_seq(false);
    bool kills = mod_finite_equal(f, EvPeriodic::zero(k));
    kernel_ok = kills == (f.support_class() == SupportClass::finite);
  }
  report.add("periodic.kernel_model",
             "within the model, π(f) = 0 in T^{-1}Λ iff Su(f) is finite", inst, kernel_ok);
  return report;
}

}  // namespace

CheckReport run_one_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "algebra") return algebra_suite(config);
  if (name == "ideals") return ideals_suite(config);
  if (name == "tensor") return tensor_suite(config);
  if (name == "localization") return localization_suite(config);
  if (name == "spectrum") return spectrum_suite(config);
  if (name == "scheme") return scheme_suite(config);
  if (name == "duality") return duality_suite_runner(config);
  if (name == "ev_periodic") return ev_periodic_suite(config);
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace lambda_lab::detail
