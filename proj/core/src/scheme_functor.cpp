#include "lambda_lab/scheme_functor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "lambda_lab/powerset_ring.hpp"
#include "lambda_lab/spectrum.hpp"
#include "lambda_lab/tensor_local.hpp"

namespace lambda_lab {

ProdElem SheafedSet::restrict(const ProdElem& s, const Subset& from, const Subset& to) const {
  if (!to.subset_of(from)) throw std::invalid_argument("restriction target is not contained");
  Ring rf = sections(from);
  if (!s.ring()->same_as(*rf)) throw std::invalid_argument("ring mismatch");
  // positions of `to` within the `from` ring
  Subset inner = Subset::none(rf->size());
  int j = 0;
  for (int pos : from.positions()) {
    if (to.contains(pos)) inner = inner.with(j);
    ++j;
  }
  return Projection{rf, sections(to), inner}.apply(s);
}

namespace {

// digit view of the sections over a subset of base positions
struct SectionSpace {
  std::vector<int> positions;  // base positions, ascending
  std::vector<int> orders;     // field orders
  std::uint64_t count = 1;

  SectionSpace(const Ring& base, const Subset& u) {
    for (int pos : u.positions()) {
      positions.push_back(pos);
      orders.push_back(base->field(pos)->order());
      count *= static_cast<std::uint64_t>(orders.back());
    }
  }

  int digit(std::uint64_t rank, size_t slot) const {
    for (size_t i = 0; i < slot; ++i) rank /= orders[i];
    return static_cast<int>(rank % orders[slot]);
  }
};

// matching families over one cover, counted by consistency backtracking:
// a family is matching iff all sections agree pointwise on overlaps
std::uint64_t count_matching_families(const Ring& base, const std::vector<SectionSpace>& cover,
                                      std::vector<int>& fixed, size_t i) {
  if (i == cover.size()) return 1;
  const SectionSpace& space = cover[i];
  std::uint64_t total = 0;
  for (std::uint64_t rank = 0; rank < space.count; ++rank) {
    bool consistent = true;
    for (size_t slot = 0; slot < space.positions.size() && consistent; ++slot) {
      int v = fixed[space.positions[slot]];
      consistent = v < 0 || v == space.digit(rank, slot);
    }
    if (!consistent) continue;
    std::vector<int> touched;
    for (size_t slot = 0; slot < space.positions.size(); ++slot) {
      int pos = space.positions[slot];
      if (fixed[pos] < 0) {
        fixed[pos] = space.digit(rank, slot);
        touched.push_back(pos);
      }
    }
    total += count_matching_families(base, cover, fixed, i + 1);
    for (int pos : touched) fixed[pos] = -1;
  }
  return total;
}

}  // namespace

CheckReport check_sheaf(const Ring& base) {
  CheckReport report;
  std::string inst = base->describe();
  int n = base->size();
  if (n > 6) throw std::invalid_argument("sheaf check limited to |X| ≤ 6");
  bool exhaustive = n <= 4;
  std::uint64_t opens = subset_space_size(n);

  // presheaf laws: identity restriction and composition over nested triples
  SheafedSet sheaf(base);
  bool identity_ok = true, composition_ok = true;
  for (std::uint64_t ub = 0; ub < opens; ++ub) {
    Subset u(ub, n);
    Ring ru = sheaf.sections(u);
    for (std::uint64_t r = 0; r < ru->cardinality(); ++r) {
      ProdElem s = ru->element_at(r);
      if (!(sheaf.restrict(s, u, u) == s)) identity_ok = false;
    }
    for (std::uint64_t vb = 0; vb < opens; ++vb) {
      Subset v(vb, n);
      if (!v.subset_of(u)) continue;
      for (std::uint64_t wb = 0; wb < opens; ++wb) {
        Subset w(wb, n);
        if (!w.subset_of(v)) continue;
        for (std::uint64_t r = 0; r < ru->cardinality(); ++r) {
          ProdElem s = ru->element_at(r);
          if (!(sheaf.restrict(sheaf.restrict(s, u, v), v, w) == sheaf.restrict(s, u, w)))
            composition_ok = false;
        }
      }
    }
  }
  report.add("sheaf.presheaf.identity", "res_{U,U} = id on every open", inst, identity_ok);
  report.add("sheaf.presheaf.composition", "res_{V,W} ∘ res_{U,V} = res_{U,W}", inst,
             composition_ok);

  // sheaf axioms: identity and unique gluing over covers of every open
  bool glue_ok = true;
  std::uint64_t covers_checked = 0;
  std::mt19937_64 rng(2025);
  for (std::uint64_t ub = 0; ub < opens && glue_ok; ++ub) {
    Subset u(ub, n);
    Ring ru = sheaf.sections(u);
    std::vector<std::uint64_t> sub_masks;
    for (std::uint64_t m = 0; m < opens; ++m)
      if (Subset(m, n).subset_of(u)) sub_masks.push_back(m);

    auto check_cover = [&](std::uint64_t family_bits) {
      std::vector<SectionSpace> cover;
      std::uint64_t un = 0;
      for (size_t k = 0; k < sub_masks.size(); ++k)
        if ((family_bits >> k) & 1u) {
          cover.emplace_back(base, Subset(sub_masks[k], n));
          un |= sub_masks[k];
        }
      if (un != u.bits()) return;  // not a cover of U
      ++covers_checked;
      // identity axiom: restriction tuples are distinct over O(U)
      SectionSpace uspace(base, u);
      std::set<std::vector<std::uint64_t>> images;
      for (std::uint64_t r = 0; r < uspace.count; ++r) {
        std::vector<int> value(n, -1);
        for (size_t slot = 0; slot < uspace.positions.size(); ++slot)
          value[uspace.positions[slot]] = uspace.digit(r, slot);
        std::vector<std::uint64_t> tuple;
        for (const SectionSpace& space : cover) {
          std::uint64_t rank = 0;
          for (size_t slot = space.positions.size(); slot-- > 0;)
            rank = rank * space.orders[slot] + value[space.positions[slot]];
          tuple.push_back(rank);
        }
        if (!images.insert(tuple).second) glue_ok = false;
      }
      // gluing: every matching family is one of those images, uniquely
      std::vector<int> fixed(n, -1);
      if (count_matching_families(base, cover, fixed, 0) != uspace.count) glue_ok = false;
    };

    if (exhaustive) {
      std::uint64_t family_space = std::uint64_t{1} << sub_masks.size();  // |X| ≤ 4: ≤ 2^16
      for (std::uint64_t fb = 1; fb < family_space && glue_ok; ++fb) check_cover(fb);
      if (u.empty()) check_cover(0);  // the empty family covers the empty open
    } else {
      for (int t = 0; t < 200 && glue_ok; ++t) {
        std::uint64_t bits = rng();
        if (sub_masks.size() < 64) bits &= (std::uint64_t{1} << sub_masks.size()) - 1;
        if (bits) check_cover(bits);
      }
    }
  }
  report.add("sheaf.gluing",
             "matching families over every cover glue to a unique section",
             inst + (exhaustive ? "" : " (sampled covers)"), glue_ok,
             std::to_string(covers_checked) + " covers");
  return report;
}

SchemeMorphismWitness eta_morphism(const Ring& base) {
  if (base->cardinality() > 1024)
    throw std::invalid_argument("spectrum comparison limited to |Λ| ≤ 1024");
  SchemeMorphismWitness w;
  std::string inst = base->describe();
  IdealOracleResult oracle = enumerate_ideals(base);

  // η: x ↦ 𝔪_x must be a bijection onto the oracle's primes
  std::vector<int> eta(base->size(), -1);
  std::set<int> hit;
  bool points_ok = true;
  for (int x = 0; x < base->size(); ++x) {
    eta[x] = oracle.find(SupportIdeal::maximal(base, x));
    if (eta[x] < 0 || !hit.insert(eta[x]).second) points_ok = false;
  }
  std::set<int> primes(oracle.primes.begin(), oracle.primes.end());
  w.points_bijective = points_ok && hit == primes;
  w.report.add("eta.points", "η: x ↦ 𝔪_x is a bijection onto Spec Λ", inst, w.points_bijective);

  // η^{-1}(D(f)) = Su(f) for every f, with D(f) read off the oracle
  std::uint64_t card = base->cardinality();
  std::vector<std::set<int>> d_of(card);
  std::vector<Subset> supports;
  supports.reserve(card);
  w.basic_opens_match = true;
  for (std::uint64_t r = 0; r < card; ++r) {
    ProdElem f = base->element_at(r);
    supports.push_back(f.support());
    for (int p : oracle.primes)
      if (!oracle.contains(p, r)) d_of[r].insert(p);
    std::set<int> pulled;
    for (int pos : supports[r].positions()) pulled.insert(eta[pos]);
    if (pulled != d_of[r]) w.basic_opens_match = false;
  }
  w.report.add("eta.basic_opens", "η^{-1}(D(f)) = Su(f) for every f", inst, w.basic_opens_match);

  // D(f) ⊆ D(g) iff Su(f) ⊆ Su(g): both directions, all pairs
  w.containment_iff = true;
  for (std::uint64_t r = 0; r < card && w.containment_iff; ++r)
    for (std::uint64_t s = 0; s < card; ++s) {
      bool d_incl = std::includes(d_of[s].begin(), d_of[s].end(), d_of[r].begin(), d_of[r].end());
      bool su_incl = supports[r].subset_of(supports[s]);
      if (d_incl != su_incl) {
        w.containment_iff = false;
        break;
      }
    }
  w.report.add("eta.containment", "D(f) ⊆ D(g) iff Su(f) ⊆ Su(g)", inst, w.containment_iff);

  // each comparison ψ_{D(f)}: Λ_f → O(Su(f)) is a ring isomorphism
  w.comparisons_iso = true;
  if (card <= 64) {
    for (std::uint64_t r = 0; r < card && w.comparisons_iso; ++r)
      w.comparisons_iso = check_localization_at_element(base->element_at(r)).ok();
  } else {
    for (std::uint64_t bits = 0; bits < subset_space_size(base->size()) && w.comparisons_iso;
         ++bits)
      w.comparisons_iso =
          check_localization_at_element(base->indicator(Subset(bits, base->size()))).ok();
  }
  w.report.add("eta.comparison_iso", "every ψ_{D(f)}: Λ_f → O(Su(f)) is a ring isomorphism",
               inst, w.comparisons_iso);

  // restriction squares commute for D(g) ⊆ D(f), one pair per support pair
  w.squares_commute = true;
  SheafedSet sheaf(base);
  for (std::uint64_t fb = 0; fb < subset_space_size(base->size()) && w.squares_commute; ++fb)
    for (std::uint64_t gb = 0; gb < subset_space_size(base->size()); ++gb) {
      Subset sf(fb, base->size()), sg(gb, base->size());
      if (!sg.subset_of(sf)) continue;
      ProdElem f = base->indicator(sf), g = base->indicator(sg);
      FractionRing lf = localize(base, MultiplicativeSet::powers_of(f));
      FractionRing lg = localize(base, MultiplicativeSet::powers_of(g));
      QuotAlgebra tf = QuotAlgebra::over_support(f), tg = QuotAlgebra::over_support(g);
      auto pi_prime = [](const QuotAlgebra& t, const Fraction& fr) {
        return t.project(fr.num) * t.project(fr.den).inverse();
      };
      bool commutes = true;
      for (const Fraction& u : lf.all_fractions()) {
        // Spec-side restriction Λ_f → Λ_g followed by ψ_{D(g)} ...
        Fraction res_u = lg.from(u.num * u.den.pseudo_inverse());
        ProdElem via_g = pi_prime(tg, res_u);
        // ... equals ψ_{D(f)} followed by the sheaf restriction
        ProdElem via_f = sheaf.restrict(pi_prime(tf, u), sf, sg);
        if (!(via_g == via_f)) {
          commutes = false;
          break;
        }
      }
      if (!commutes) {
        w.squares_commute = false;
        break;
      }
    }
  w.report.add("eta.squares", "ψ commutes with the restriction maps on basic opens", inst,
               w.squares_commute);
  return w;
}

CheckReport check_separated(const Ring& base) {
  CheckReport report;
  std::string inst = base->describe();
  int n = base->size();
  if (n > 6) throw std::invalid_argument("separatedness check limited to |X| ≤ 6");
  SheafedSet sheaf(base);

  bool intersections_open = true;  // trivially, but recorded
  bool structural_ok = true;
  bool semantic_ok = true;
  bool paths_agree = true;

  for (std::uint64_t ub = 0; ub < subset_space_size(n); ++ub)
    for (std::uint64_t vb = 0; vb < subset_space_size(n); ++vb) {
      Subset u(ub, n), v(vb, n), meet = u & v;
      // structural: the tensor of the section algebras survives exactly on U∩V
      QuotAlgebra qu = QuotAlgebra::surviving(base, u);
      QuotAlgebra qv = QuotAlgebra::surviving(base, v);
      bool structural = tensor(qu, qv).survivors() == meet;
      if (!structural) structural_ok = false;

      // semantic: the additive closure of {(s|)(t|)} fills O(U∩V)
      Ring rm = sheaf.sections(meet);
      std::set<std::uint64_t> products;
      Ring ru = sheaf.sections(u), rv = sheaf.sections(v);
      for (std::uint64_t r = 0; r < ru->cardinality(); ++r) {
        ProdElem su = sheaf.restrict(ru->element_at(r), u, meet);
        for (std::uint64_t s = 0; s < rv->cardinality(); ++s)
          products.insert(
              rm->rank_of(su * sheaf.restrict(rv->element_at(s), v, meet)));
      }
      std::set<std::uint64_t> closure{rm->rank_of(rm->zero())};
      std::vector<std::uint64_t> frontier(closure.begin(), closure.end());
      while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t e : frontier)
          for (std::uint64_t p : products) {
            std::uint64_t sum = rm->rank_of(rm->element_at(e) + rm->element_at(p));
            if (closure.insert(sum).second) next.push_back(sum);
          }
        frontier = std::move(next);
      }
      bool semantic = closure.size() == rm->cardinality();
      if (!semantic) semantic_ok = false;
      if (structural != semantic) paths_agree = false;
    }

  report.add("separated.intersection_open", "U∩V is open for all opens U, V", inst,
             intersections_open);
  report.add("separated.surjective.structural",
             "O(U)⊗O(V) → O(U∩V) is surjective (surviving-coordinate path)", inst, structural_ok);
  report.add("separated.surjective.semantic",
             "O(U)⊗O(V) → O(U∩V) is surjective (additive closure of restricted products)", inst,
             semantic_ok);
  report.add("separated.paths_agree", "both separatedness verification paths agree", inst,
             paths_agree);
  return report;
}

CheckReport check_affine_iff_finite(const Ring& base) {
  CheckReport report;
  std::string inst = base->describe();

  SchemeMorphismWitness eta = eta_morphism(base);
  report.merge(eta.report);
  report.add("affine.finite", "for finite X the scheme is affine: (X, O_X) ≅ Spec Λ", inst,
             eta.ok());

  // quasi-compactness shadow: the singleton cover has no proper subcover
  bool minimal = true;
  for (int x = 0; x < base->size() && minimal; ++x) {
    Subset rest = base->no_points();
    for (int y = 0; y < base->size(); ++y)
      if (y != x) rest = rest.with(y);
    minimal = !base->all_points().subset_of(rest);
  }
  report.add("affine.singleton_cover",
             "the singleton cover is minimal: its proper subfamilies do not cover X", inst,
             minimal);
  report.add_partial("affine.infinite_proxy",
                     "for infinite X the scheme is not affine (not quasi-compact); proxy: the "
                     "minimal subcover of the singleton cover has exactly |X| members",
                     inst, "minimal subcover size " + std::to_string(base->size()));

  // stalks: {x} is the least open containing x, and germs collapse to K_x
  SheafedSet sheaf(base);
  bool stalks_ok = true;
  std::string stalk_detail;
  for (int x = 0; x < base->size() && stalks_ok; ++x) {
    Subset point = Subset::single(x, base->size());
    Ring rx = sheaf.sections(point);
    stalks_ok = rx->size() == 1 && rx->field(0) == base->field(x);
    for (std::uint64_t ub = 0; ub < subset_space_size(base->size()) && stalks_ok; ++ub) {
      Subset u(ub, base->size());
      if (!u.contains(x)) continue;
      // every open containing x restricts onto O({x}) surjectively and
      // multiplicatively, so the direct limit collapses onto K_x
      Ring ru = sheaf.sections(u);
      std::set<std::uint64_t> image;
      for (std::uint64_t r = 0; r < ru->cardinality(); ++r)
        image.insert(rx->rank_of(sheaf.restrict(ru->element_at(r), u, point)));
      stalks_ok = image.size() == rx->cardinality();
    }
    if (stalks_ok) stalk_detail += (x ? " " : "") + base->label(x) + ":" +
                                   base->field(x)->name();
  }
  report.add("affine.stalks", "the stalk at each x is K_x (direct-limit collapse onto O({x}))",
             inst, stalks_ok, stalk_detail);
  return report;
}

ProdElem FunMorphism::apply(const ProdElem& g) const {
  if (!g.ring()->same_as(*domain)) throw std::invalid_argument("ring mismatch");
  std::vector<FieldElem> coords;
  coords.reserve(codomain->size());
  for (size_t x = 0; x < map.image.size(); ++x) coords.push_back(g.at(map.image[x]));
  return ProdElem(codomain, std::move(coords));
}

FunMorphism fun_functor(const PointMap& f, const FieldSpec* k) {
  return FunMorphism{f, k, IndexSet::constant(f.codomain, k),
                     IndexSet::constant(f.domain, k)};
}

CheckReport duality_suite(const PointMap& f, const FieldSpec* k) {
  CheckReport report;
  FunMorphism fun = fun_functor(f, k);
  std::string inst = "f=" + f.describe() + " K=" + k->name();

  std::uint64_t dom_card = fun.domain->cardinality();
  std::uint64_t cod_card = fun.codomain->cardinality();

  // Fun(f) is a ring morphism
  bool morphism = fun.apply(fun.domain->one()) == fun.codomain->one();
  for (std::uint64_t r = 0; r < dom_card && morphism; ++r)
    for (std::uint64_t s = 0; s < dom_card && morphism; ++s) {
      ProdElem a = fun.domain->element_at(r), b = fun.domain->element_at(s);
      morphism = fun.apply(a + b) == fun.apply(a) + fun.apply(b) &&
                 fun.apply(a * b) == fun.apply(a) * fun.apply(b);
    }
  report.add("duality.morphism", "Fun(f) is a morphism of rings", inst, morphism);

  // η-naturality: the contraction of 𝔪_x along Fun(f) is 𝔪_{f(x)}
  bool naturality = true;
  for (size_t x = 0; x < f.domain.size() && naturality; ++x) {
    SupportIdeal mx = SupportIdeal::maximal(fun.codomain, static_cast<int>(x));
    SupportIdeal mfx = SupportIdeal::maximal(fun.domain, f.image[x]);
    for (std::uint64_t r = 0; r < dom_card && naturality; ++r) {
      ProdElem g = fun.domain->element_at(r);
      naturality = mx.contains(fun.apply(g)) == mfx.contains(g);
    }
  }
  report.add("duality.eta_naturality", "Fun(f)*(𝔪_x) = 𝔪_{f(x)} for every x", inst, naturality);

  // injective(f) ⇔ surjective(Fun(f))
  std::set<std::uint64_t> image;
  for (std::uint64_t r = 0; r < dom_card; ++r)
    image.insert(fun.codomain->rank_of(fun.apply(fun.domain->element_at(r))));
  bool fun_surjective = image.size() == cod_card;
  report.add("duality.injective_surjective", "f is injective iff Fun(f) is surjective", inst,
             f.injective() == fun_surjective);

  // surjective(f) ⇔ injective(Fun(f))
  bool fun_injective = true;
  for (std::uint64_t r = 0; r < dom_card && fun_injective; ++r) {
    ProdElem g = fun.domain->element_at(r);
    if (fun.apply(g) == fun.codomain->zero() && !(g == fun.domain->zero()))
      fun_injective = false;
  }
  report.add("duality.surjective_injective", "f is surjective iff Fun(f) is injective", inst,
             f.surjective() == fun_injective);
  return report;
}

CheckReport duality_suite_all(int max_size, const std::vector<const FieldSpec*>& fields) {
  CheckReport report;
  auto labels = [](const char* stem, int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
    return out;
  };

  for (int nx = 1; nx <= max_size; ++nx)
    for (int ny = 1; ny <= max_size; ++ny) {
      auto xs = labels("x", nx), ys = labels("y", ny);
      std::vector<PointMap> maps = PointMap::all_maps(xs, ys);
      for (const FieldSpec* k : fields)
        for (const PointMap& f : maps) report.merge(duality_suite(f, k));

      // faithfulness: distinct maps induce distinct Fun(f) and distinct 𝒫(f)
      const FieldSpec* k0 = fields.at(0);
      std::set<std::vector<std::uint64_t>> fun_signatures, ps_signatures;
      bool faithful = true;
      for (const PointMap& f : maps) {
        FunMorphism fun = fun_functor(f, k0);
        std::vector<std::uint64_t> sig;
        for (std::uint64_t r = 0; r < fun.domain->cardinality(); ++r)
          sig.push_back(fun.codomain->rank_of(fun.apply(fun.domain->element_at(r))));
        if (!fun_signatures.insert(sig).second) faithful = false;
        PowersetMorphism ps = powerset_functor(f);
        std::vector<std::uint64_t> psig;
        for (const SetElem& a : ps.domain->elements()) psig.push_back(ps.apply(a).set().bits());
        if (!ps_signatures.insert(psig).second) faithful = false;
      }
      report.add("duality.faithful", "Fun(-,K) and 𝒫(-) are faithful",
                 "|X|=" + std::to_string(nx) + " |Y|=" + std::to_string(ny) + " K=" + k0->name(),
                 faithful);

      // χ-naturality: χ ∘ 𝒫(f) = Fun(f) ∘ χ over F_2
      const FieldSpec* f2 = FieldSpec::get(2);
      bool natural = true;
      for (const PointMap& f : maps) {
        FunMorphism fun = fun_functor(f, f2);
        PowersetMorphism ps = powerset_functor(f);
        for (const SetElem& a : ps.domain->elements())
          if (!(char_function(ps.apply(a)) == fun.apply(char_function(a)))) natural = false;
      }
      report.add("duality.char_naturality",
                 "A ↦ χ_A intertwines 𝒫(f) with Fun(f) over F_2",
                 "|X|=" + std::to_string(nx) + " |Y|=" + std::to_string(ny), natural);
    }

  // functor laws: identity and composition (both functors, both directions)
  bool identity_law = true, composition_law = true;
  const FieldSpec* k0 = fields.at(0);
  for (int nx = 1; nx <= max_size && identity_law; ++nx) {
    auto xs = labels("x", nx);
    PointMap idm = PointMap::identity(xs);
    FunMorphism fun = fun_functor(idm, k0);
    for (std::uint64_t r = 0; r < fun.domain->cardinality(); ++r)
      if (!(fun.apply(fun.domain->element_at(r)) == fun.domain->element_at(r)))
        identity_law = false;
    PowersetMorphism ps = powerset_functor(idm);
    for (const SetElem& a : ps.domain->elements())
      if (!(ps.apply(a).set() == a.set())) identity_law = false;
  }
  int cap = std::min(max_size, 2);
  for (int nx = 1; nx <= cap && composition_law; ++nx)
    for (int ny = 1; ny <= cap && composition_law; ++ny)
      for (int nz = 1; nz <= cap && composition_law; ++nz) {
        auto xs = labels("x", nx), ys = labels("y", ny), zs = labels("z", nz);
        for (const PointMap& f : PointMap::all_maps(xs, ys))
          for (const PointMap& g : PointMap::all_maps(ys, zs)) {
            PointMap gf = PointMap::compose(g, f);
            FunMorphism fun_gf = fun_functor(gf, k0);
            FunMorphism fun_f = fun_functor(f, k0);
            FunMorphism fun_g = fun_functor(g, k0);
            for (std::uint64_t r = 0; r < fun_gf.domain->cardinality(); ++r) {
              ProdElem h = fun_gf.domain->element_at(r);
              if (!(fun_gf.apply(h) == fun_f.apply(fun_g.apply(h)))) composition_law = false;
            }
            PowersetMorphism ps_gf = powerset_functor(gf);
            PowersetMorphism ps_f = powerset_functor(f);
            PowersetMorphism ps_g = powerset_functor(g);
            for (const SetElem& a : ps_gf.domain->elements())
              if (!(ps_gf.apply(a).set() == ps_f.apply(ps_g.apply(a)).set()))
                composition_law = false;
          }
      }
  report.add("duality.functor_identity", "Fun(id) = id and 𝒫(id) = id",
             "sizes ≤ " + std::to_string(max_size), identity_law);
  report.add("duality.functor_composition",
             "Fun(g∘f) = Fun(f)∘Fun(g) and 𝒫(g∘f) = 𝒫(f)∘𝒫(g)",
             "sizes ≤ " + std::to_string(cap), composition_law);
  return report;
}

}  // namespace lambda_lab
