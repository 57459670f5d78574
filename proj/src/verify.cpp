// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/verify.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include <json.hpp>

#include "crsym/construct.hpp"
#include "crsym/io.hpp"

namespace crsym {

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

namespace {

CheckResult start(std::string name, const FormSpace& m) {
  CheckResult r;
  r.name = std::move(name);
  r.params["q"] = std::to_string(m.field().order());
  r.params["n"] = std::to_string(m.n());
  r.params["d"] = std::to_string(m.dim());
  return r;
}

void fail(CheckResult& r, const FormSpace& m, std::string note) {
  r.status = CheckStatus::Fail;
  r.notes.push_back(std::move(note));
  const std::string w = format_form_space(m);
  if (std::find(r.witnesses.begin(), r.witnesses.end(), w) == r.witnesses.end()) r.witnesses.push_back(w);
}

void skip(CheckResult& r, std::string note) {
  r.status = CheckStatus::Skipped;
  r.notes.push_back(std::move(note));
}

std::string coords_text(std::span<const Elem> c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

bool totally_isotropic(const SymForm& g, const VecSubspace& r) {
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = i; j < r.dim(); ++j)
      if (g.eval(r.basis_vector(i), r.basis_vector(j)) != 0) return false;
  return true;
}

bool in_common_radical_range(std::size_t n, std::size_t d) {
  if (n < 2 || n % 2 != 0) return false;
  switch (n % 6) {
    case 0: {
      const std::size_t m = n / 6;
      return d >= 4 * m && d <= 6 * m - 1;
    }
    case 2: {
      const std::size_t m = (n - 2) / 6;
      return d >= 4 * m + 1 && d <= 6 * m + 1;
    }
    default: {
      const std::size_t m = (n - 4) / 6;
      return d >= 4 * m + 3 && d <= 6 * m + 3;
    }
  }
}

// Subspace of V spanned by sum_k c_k r_k for each coordinate row c.
VecSubspace lift(const VecSubspace& coords, const VecSubspace& r) {
  Mat rows(0, r.ambient_dim());
  for (std::size_t i = 0; i < coords.dim(); ++i) rows.append_row(r.combine(coords.basis_vector(i)));
  return VecSubspace::span(r.field(), r.ambient_dim(), std::move(rows));
}

std::vector<Elem> apply(const Field& f, const Mat& a, std::span<const Elem> v) {
  std::vector<Elem> out(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) out[i] = f.add(out[i], f.mul(a(i, j), v[j]));
  return out;
}

std::vector<Elem> negate(const Field& f, std::span<const Elem> v) {
  std::vector<Elem> out(v.begin(), v.end());
  for (auto& x : out) x = f.neg(x);
  return out;
}

// Orbit sizes of the group generated by `gens` acting on the q^len - 1
// nonzero vectors (indexed in counter order), plus whether every orbit is
// paired with its negative as a different orbit.
template <class Act>
std::pair<std::vector<std::uint64_t>, bool> orbit_census(const Field& f, std::size_t len, std::size_t gens, Act&& act) {
  const std::uint64_t total = checked_pow(f.order(), static_cast<std::uint32_t>(len));
  std::vector<std::int64_t> orbit(total, -1);
  std::vector<std::uint64_t> sizes;
  std::vector<std::vector<Elem>> reps;
  std::uint64_t idx = 0;
  for_each_vector(f.order(), len, [&](std::span<const Elem> v) {
    const std::uint64_t here = idx++;
    if (here == 0 || orbit[here] >= 0) return;
    const auto id = static_cast<std::int64_t>(sizes.size());
    std::queue<std::vector<Elem>> todo;
    todo.emplace(v.begin(), v.end());
    orbit[here] = id;
    std::uint64_t size = 0;
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop();
      ++size;
      for (std::size_t g = 0; g < gens; ++g) {
        auto y = act(g, x);
        const auto yi = vector_index(f.order(), y);
        if (orbit[yi] < 0) {
          orbit[yi] = id;
          todo.push(std::move(y));
        }
      }
    }
    sizes.push_back(size);
    reps.emplace_back(v.begin(), v.end());
  });
  bool paired = true;
  for (std::size_t o = 0; o < reps.size(); ++o) {
    const auto neg = negate(f, reps[o]);
    const auto other = orbit[vector_index(f.order(), neg)];
    if (other == static_cast<std::int64_t>(o) || sizes[static_cast<std::size_t>(other)] != sizes[o]) paired = false;
  }
  std::sort(sizes.begin(), sizes.end());
  return {sizes, paired};
}

Mat mat_pow(const Field& f, const Mat& a, unsigned e) {
  Mat out = Mat::identity(a.rows);
  for (unsigned i = 0; i < e; ++i) out = multiply(f, out, a);
  return out;
}

}  // namespace

CheckResult check_radical_isotropy(const FormSpace& m) {
  CheckResult r = start("radical_isotropy", m);
  r.label = "instance-verified";
  const auto cr = is_constant_rank(m);
  if (!cr) {
    skip(r, "hypothesis not met: M is not constant rank");
    return r;
  }
  const std::uint32_t q = m.field().order();
  const bool hyp = q >= *cr + 1;
  r.counts["rank"] = static_cast<std::int64_t>(*cr);
  r.counts["hypothesis_q_gt_r"] = hyp;
  std::int64_t elements = 0, violations = 0;
  std::string first_bad;
  for_each_span_element(m, [&](std::span<const Elem> c, const SymForm& f) {
    if (is_zero(c)) return;
    ++elements;
    const VecSubspace rad = radical(f);
    for (const auto& g : m.basis())
      if (!totally_isotropic(g, rad)) {
        if (violations == 0) first_bad = coords_text(c);
        ++violations;
        return;
      }
  });
  r.counts["elements"] = elements;
  r.counts["violating_elements"] = violations;
  r.counts["conclusion_holds"] = violations == 0;
  if (!hyp) {
    skip(r, "hypothesis not met: q = " + std::to_string(q) + " < r + 1 = " + std::to_string(*cr + 1) +
                "; conclusion " + (violations == 0 ? "holds" : "fails") + " on this instance");
    if (violations) r.notes.push_back("first element whose radical is not totally isotropic: " + first_bad);
    return r;
  }
  if (violations) fail(r, m, "radical of element " + first_bad + " is not totally isotropic");
  return r;
}

CheckResult check_common_radical(const FormSpace& m) {
  CheckResult r = start("common_radical", m);
  r.label = "instance-verified";
  const auto cr = is_constant_rank(m);
  if (!cr) {
    skip(r, "hypothesis not met: M is not constant rank");
    return r;
  }
  const std::uint32_t q = m.field().order();
  const std::size_t n = m.n(), d = m.dim(), rk = *cr;
  const RadicalProfile prof = radical_profile(m);
  r.counts["rank"] = static_cast<std::int64_t>(rk);
  r.counts["t"] = static_cast<std::int64_t>(prof.t);

  bool checked = false;
  if (prof.partition) {
    const PartitionReport& p = *prof.partition;
    r.counts["partition_valid"] = p.valid;
    r.counts["partition_pieces"] = static_cast<std::int64_t>(p.t);
    if (p.min_bound) r.counts["partition_min_bound"] = static_cast<std::int64_t>(*p.min_bound);
    checked = true;
    if (!p.valid) fail(r, m, "the subspaces M_<u> do not partition M");
    if (p.nontrivial && !p.min_bound_satisfied) fail(r, m, "nontrivial partition with fewer pieces than the bound");
  }

  const bool odd_case = rk % 2 == 1 && d == rk && q % 2 == 1 && q > rk;
  const bool even_case = n % 2 == 0 && rk + 1 == n && q >= n && in_common_radical_range(n, d);
  if (odd_case) {
    checked = true;
    const auto iso = common_isotropic_points(m);
    const VecSubspace rad = prof.groups.front().first;
    bool inside = true;
    for (const auto& v : iso) inside = inside && rad.contains(v);
    r.counts["common_isotropic_total"] = static_cast<std::int64_t>(iso.size());
    r.counts["common_isotropic_equals_radical"] = inside && iso.size() == rad.size();
    if (prof.t != 1) fail(r, m, "odd rank r = d < q but " + std::to_string(prof.t) + " distinct radicals");
    else if (!(inside && iso.size() == rad.size())) fail(r, m, "common isotropic set differs from the radical");
  }
  if (even_case) {
    checked = true;
    if (prof.t != 1) fail(r, m, "even n, rank n-1, q >= n, d in range, but " + std::to_string(prof.t) + " radicals");
  }
  if (!odd_case && !even_case) {
    std::string why = "no common-radical hypothesis applies (rank " + std::to_string(rk) + ", d = " +
                      std::to_string(d) + ", q = " + std::to_string(q) + ", n = " + std::to_string(n) + ")";
    if (checked && r.status == CheckStatus::Pass) r.notes.push_back(why + "; partition checks passed");
    else if (r.status == CheckStatus::Pass) skip(r, why);
  }
  return r;
}

CheckResult check_count_formula(const FormSpace& m) {
  CheckResult r = start("count_formula", m);
  const CensusReport rep = census_report(m);
  r.counts["A"] = static_cast<std::int64_t>(rep.census.positive);
  r.counts["B"] = static_cast<std::int64_t>(rep.census.negative);
  r.counts["common_isotropic_total"] = static_cast<std::int64_t>(rep.common_isotropic_total);
  r.counts["formula_numerator"] = rep.formula_value.numerator();
  r.counts["formula_denominator"] = rep.formula_value.denominator();
  if (!rep.agreement)
    fail(r, m,
         "formula gives " + format_rational(rep.formula_value) + ", enumeration gives " +
             std::to_string(rep.common_isotropic_total));
  return r;
}

CheckResult check_rank4_radical_intersections(const FormSpace& m) {
  CheckResult r = start("rank4_radical_intersections", m);
  r.label = "instance-verified";
  const auto cr = is_constant_rank(m);
  const std::uint32_t q = m.field().order();
  if (!cr || *cr != 4) return skip(r, "hypothesis not met: M is not constant rank 4"), r;
  if (q < 5) return skip(r, "hypothesis not met: q < 5"), r;
  if (m.dim() < 2) return skip(r, "hypothesis not met: dim M < 2"), r;

  std::optional<SymForm> neg;
  std::vector<SymForm> others;
  for_each_span_element(m, [&](std::span<const Elem> c, const SymForm& f) {
    if (is_zero(c)) return;
    if (!neg && classify_type(f) == FormType::Negative) neg = f;
    others.push_back(f);
  });
  if (!neg) return skip(r, "hypothesis not met: no element of negative type"), r;

  const VecSubspace rad = radical(*neg);
  std::int64_t bad12 = 0;
  for (const auto& g : others) {
    const VecSubspace s = radical(g);
    if (s.dim() - rad.intersect(s).dim() > 1) ++bad12;
  }
  r.counts["radical_dim"] = static_cast<std::int64_t>(rad.dim());
  r.counts["intersection_violations"] = bad12;
  if (bad12) fail(r, m, "radical intersection of codimension > 1");

  if (m.n() >= 5 && rad.dim() >= 1) {
    const auto mr = forms_with_radical_containing(m, rad).coords;
    std::vector<VecSubspace> mi;
    for_each_subspace(m.field_ptr(), rad.dim(), rad.dim() - 1, [&](const VecSubspace& u) {
      mi.push_back(forms_with_radical_containing(m, lift(u, rad)).coords);
    });
    std::int64_t bad13 = 0;
    std::size_t max_dim = 0;
    for (std::size_t i = 0; i < mi.size(); ++i) {
      max_dim = std::max(max_dim, mi[i].dim());
      for (std::size_t j = i + 1; j < mi.size(); ++j)
        if (!(mi[i].intersect(mi[j]) == mr)) ++bad13;
    }
    // Every element lies in some M_i.
    std::int64_t uncovered = 0;
    for_each_span_element(m, [&](std::span<const Elem> c, const SymForm&) {
      if (is_zero(c)) return;
      bool hit = false;
      for (const auto& s : mi) hit = hit || s.contains(c);
      if (!hit) ++uncovered;
    });
    r.counts["codim1_subspaces"] = static_cast<std::int64_t>(mi.size());
    r.counts["dim_M_R"] = static_cast<std::int64_t>(mr.dim());
    r.counts["max_dim_M_i"] = static_cast<std::int64_t>(max_dim);
    r.counts["intersection_mismatches"] = bad13;
    r.counts["uncovered_elements"] = uncovered;
    if (bad13) fail(r, m, "M_i and M_j meet outside M_R");
    if (max_dim > 4 || mr.dim() > 4) fail(r, m, "some M_i or M_R has dimension above 4");
    if (uncovered) fail(r, m, "an element lies in no M_i");
  } else {
    r.notes.push_back("M_U analysis needs n >= 5");
  }
  return r;
}

CheckResult check_distinct_radical_construction(std::uint32_t q, std::size_t n, unsigned mdeg) {
  CheckResult r;
  r.name = "distinct_radical_construction";
  r.params = {{"q", std::to_string(q)}, {"n", std::to_string(n)}, {"m", std::to_string(mdeg)}};
  const DistinctRadicalSpace ds = distinct_radical_space(q, n, mdeg);
  const FormSpace& m = ds.space;
  for (const auto& w : ds.warnings) r.notes.push_back(w);
  const auto cr = is_constant_rank(m);
  const RadicalProfile prof = radical_profile(m);
  const std::uint64_t lines = (checked_pow(q, mdeg) - 1) / (q - 1);
  r.counts["dim"] = static_cast<std::int64_t>(m.dim());
  r.counts["rank"] = cr ? static_cast<std::int64_t>(*cr) : -1;
  r.counts["radical_lines"] = static_cast<std::int64_t>(prof.t);
  r.counts["expected_radical_lines"] = static_cast<std::int64_t>(lines);
  if (m.dim() != mdeg) fail(r, m, "dimension differs from m");
  if (!cr || *cr + 1 != n) fail(r, m, "not constant rank n-1");
  if (prof.t != lines) fail(r, m, "radical lines are not all distinct");

  // rad f'_{zuw} = <w^{-1}> for every nonzero w in the subfield.
  const TraceSetup& s = ds.setup;
  const Field& l = *s.l;
  std::int64_t checked = 0, mismatches = 0;
  for_each_vector(q, mdeg, [&](std::span<const Elem> c) {
    if (is_zero(c)) return;
    Elem w = 0;
    for (std::size_t i = 0; i < mdeg; ++i) w = l.add(w, l.mul(s.l_over_k.embedding().embed(c[i]), ds.w_basis[i]));
    const SymForm f = s.form(l.mul(ds.z, l.mul(ds.u, w)));
    const VecSubspace expect = VecSubspace::span(s.k, n, std::vector<std::vector<Elem>>{s.v_coordinates(l.inv(w))});
    ++checked;
    if (!(radical(f) == expect)) ++mismatches;
  });
  r.counts["radicals_checked"] = checked;
  r.counts["radical_mismatches"] = mismatches;
  if (mismatches) fail(r, m, "some radical differs from <w^{-1}>");
  return r;
}

CheckResult check_construction(const std::string& name, const FormSpace& m, std::size_t rank, SearchMode mode,
                               std::size_t expected_dim,
                               std::optional<std::pair<std::uint64_t, std::uint64_t>> expected_census) {
  CheckResult r = start(name, m);
  r.params["mode"] = std::string(to_string(mode));
  const auto cr = is_constant_rank(m);
  const TypeCensus c = type_census(m, TypeRule::Checked);
  r.counts["rank"] = cr ? static_cast<std::int64_t>(*cr) : -1;
  r.counts["A"] = static_cast<std::int64_t>(c.positive);
  r.counts["B"] = static_cast<std::int64_t>(c.negative);
  if (m.dim() != expected_dim) fail(r, m, "dimension " + std::to_string(m.dim()) + " != " + std::to_string(expected_dim));
  if (!cr || *cr != rank) fail(r, m, "not constant rank " + std::to_string(rank));
  else if (!satisfies_mode(m, rank, mode)) fail(r, m, "mode predicate fails");
  if (expected_census && (c.positive != expected_census->first || c.negative != expected_census->second))
    fail(r, m, "census differs from the expected values");
  return r;
}

CheckResult check_partition_structure(const std::string& name, const PartitionSpec& p, std::size_t expected_t,
                                      const std::map<std::size_t, std::size_t>& expected_dims) {
  CheckResult r;
  r.name = name;
  r.params["q"] = std::to_string(p.ambient.field()->order());
  r.params["n"] = std::to_string(p.ambient.dim());
  const PartitionReport rep = check_partition(p);
  r.counts["valid"] = rep.valid;
  r.counts["t"] = static_cast<std::int64_t>(rep.t);
  r.counts["uncovered"] = static_cast<std::int64_t>(rep.uncovered);
  r.counts["overcovered"] = static_cast<std::int64_t>(rep.overcovered);
  if (rep.min_bound) r.counts["min_bound"] = static_cast<std::int64_t>(*rep.min_bound);
  for (const auto& [d, c] : rep.piece_dims) r.counts["pieces_dim_" + std::to_string(d)] = static_cast<std::int64_t>(c);
  auto bad = [&](std::string note) {
    r.status = CheckStatus::Fail;
    r.notes.push_back(std::move(note));
    if (r.witnesses.empty()) r.witnesses.push_back(format_partition(p));
  };
  if (!rep.valid) bad("not a subspace partition");
  if (rep.t != expected_t) bad("piece count " + std::to_string(rep.t) + " != " + std::to_string(expected_t));
  if (rep.piece_dims != expected_dims) bad("piece dimensions differ from the expected ones");
  if (rep.nontrivial && !rep.min_bound_satisfied) bad("fewer pieces than the lower bound");
  return r;
}

CheckResult rank4_f3_report() {
  const Rank4F3Space w = rank4_f3_space();
  const FormSpace& m = w.space;
  const Field& k = *w.k;
  const Field& l = *w.l;
  CheckResult r = start("rank4_f3_report", m);
  auto expect = [&](const std::string& key, std::int64_t value, std::int64_t want) {
    r.counts[key] = value;
    if (value != want) fail(r, m, key + " = " + std::to_string(value) + ", expected " + std::to_string(want));
  };

  expect("dim", static_cast<std::int64_t>(m.dim()), 5);
  const auto cr = is_constant_rank(m);
  expect("constant_rank", cr ? static_cast<std::int64_t>(*cr) : -1, 4);

  const SymForm phi1 = w.phi(1);
  expect("phi1_rank", static_cast<std::int64_t>(rank(phi1)), 4);
  expect("phi1_negative", classify_type(phi1, TypeRule::Checked) == FormType::Negative, 1);
  expect("phi1_isotropic_nonzero", static_cast<std::int64_t>(isotropic_count(phi1)) - 1, 62);

  // Common isotropic points are exactly the +-eps^j.
  const auto iso = common_isotropic_points(m);
  expect("common_isotropic_nonzero", static_cast<std::int64_t>(iso.size()) - 1, 22);
  std::set<std::vector<Elem>> eps_points;
  for (unsigned j = 0; j < 11; ++j) {
    const auto v = w.coords(l.pow(w.epsilon, j));
    eps_points.insert(v);
    eps_points.insert(negate(k, v));
  }
  std::set<std::vector<Elem>> iso_nonzero;
  for (const auto& v : iso)
    if (!is_zero(v)) iso_nonzero.insert(v);
  expect("common_isotropic_are_pm_eps_powers", iso_nonzero == eps_points, 1);

  const TypeCensus census = type_census(m, TypeRule::Checked);
  expect("A", static_cast<std::int64_t>(census.positive), 220);
  expect("B", static_cast<std::int64_t>(census.negative), 22);
  const Rational formula = common_isotropic_count_formula(5, census, 5, 3);
  expect("formula_matches_enumeration", formula == Rational(static_cast<std::int64_t>(iso.size())), 1);

  // Orbit of phi_1 under G is {phi_{eps^j}}.
  std::int64_t phi_eps_negative = 0;
  for (unsigned j = 0; j < 11; ++j)
    if (classify_type(w.phi(l.pow(w.epsilon, j))) == FormType::Negative) ++phi_eps_negative;
  expect("phi_eps_powers_negative", phi_eps_negative, 11);

  // S^{-1} T S = T^4 and |<S, T>| = 55.
  const auto s_inv = inverse(k, w.s);
  const Mat conj = multiply(k, multiply(k, *s_inv, w.t), w.s);
  expect("conjugation_relation_holds", conj == mat_pow(k, w.t, 4), 1);
  std::set<Mat> group{Mat::identity(5)};
  std::vector<Mat> frontier{Mat::identity(5)};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& g : frontier)
      for (const Mat* gen : {&w.s, &w.t}) {
        Mat h = multiply(k, g, *gen);
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  expect("group_order", static_cast<std::int64_t>(group.size()), 55);

  // phi_{g x} = g^{-T} phi_x g^{-1} for g in {S, T}, on the basis.
  const auto t_inv = inverse(k, w.t);
  std::int64_t invariance_ok = 1;
  for (const Elem b : w.basis) {
    const SymForm fx = w.phi(b);
    if (!(w.phi(l.mul(w.epsilon, b)) == fx.congruent(*t_inv))) invariance_ok = 0;
    if (!(w.phi(l.frobenius(b, 1)) == fx.congruent(*s_inv))) invariance_ok = 0;
  }
  expect("phi_equivariant_under_S_and_T", invariance_ok, 1);

  const std::vector<std::uint64_t> six{11, 11, 55, 55, 55, 55};
  {
    const Mat* gens[] = {&w.s, &w.t};
    auto [sizes, paired] = orbit_census(k, 5, 2, [&](std::size_t g, const std::vector<Elem>& x) {
      return apply(k, *gens[g], x);
    });
    expect("orbits_on_V_match", sizes == six, 1);
    expect("orbits_on_V_paired_with_negatives", paired, 1);
    r.counts["orbits_on_V"] = static_cast<std::int64_t>(sizes.size());
  }
  {
    // G acts on M through f -> g^T f g; points of M are coordinate vectors.
    const Mat* gens[] = {&*s_inv, &*t_inv};
    auto [sizes, paired] = orbit_census(k, 5, 2, [&](std::size_t g, const std::vector<Elem>& c) {
      return *m.coordinates(m.element(c).congruent(*gens[g]));
    });
    expect("orbits_on_M_match", sizes == six, 1);
    expect("orbits_on_M_paired_with_negatives", paired, 1);
    r.counts["orbits_on_M"] = static_cast<std::int64_t>(sizes.size());
  }

  // The 121 hyperplanes of M.
  std::int64_t ordinary = 0, special = 0, other = 0, special_pairs = 0;
  for_each_subspace(w.k, 5, 4, [&](const VecSubspace& h) {
    const FormSpace n4 = m.subspace(h);
    const TypeCensus c = type_census(n4);
    const auto pts = common_isotropic_points(n4);
    const std::size_t nz = pts.size() - 1;
    if (nz == 22 && c.positive == 70 && c.negative == 10) {
      ++ordinary;
    } else if (nz == 26 && c.positive == 76 && c.negative == 4) {
      ++special;
      std::vector<std::vector<Elem>> extra;
      for (const auto& v : pts)
        if (!is_zero(v) && !eps_points.count(v)) extra.push_back(v);
      // Two pairs +-v, +-w with w != +-v.
      if (extra.size() == 4) {
        std::size_t pairs = 0;
        for (const auto& v : extra)
          if (std::find(extra.begin(), extra.end(), negate(k, v)) != extra.end()) ++pairs;
        if (pairs == 4) ++special_pairs;
      }
    } else {
      ++other;
    }
  });
  expect("hyperplanes_total", ordinary + special + other, 121);
  expect("hyperplanes_22_common_isotropic_census_70_10", ordinary, 66);
  expect("hyperplanes_26_common_isotropic_census_76_4", special, 55);
  expect("hyperplanes_other", other, 0);
  expect("special_hyperplanes_with_two_extra_pairs", special_pairs, 55);

  // For v outside the 22 points, {f : f(v,v) = 0} is a special hyperplane.
  std::int64_t v_special = 0;
  for_each_vector(3, 5, [&](std::span<const Elem> v) {
    if (is_zero(v) || eps_points.count(std::vector<Elem>(v.begin(), v.end()))) return;
    Mat row(1, 5);
    for (std::size_t i = 0; i < 5; ++i) row(0, i) = m.basis()[i].quad(v);
    const VecSubspace h = VecSubspace::span(w.k, 5, nullspace(k, row));
    if (h.dim() != 4) return;
    const FormSpace n4 = m.subspace(h);
    if (common_isotropic_points(n4).size() == 27) ++v_special;
  });
  expect("vectors_whose_hyperplane_is_special", v_special, 220);

  const RadicalProfile prof = radical_profile(m);
  r.counts["radical_lines"] = static_cast<std::int64_t>(prof.t);
  if (prof.partition) r.counts["radical_partition_valid"] = prof.partition->valid;
  return r;
}

std::optional<DimensionBound> dimension_bound(std::uint32_t q, std::size_t n, std::size_t r, SearchMode mode) {
  if (q % 2 == 0) return std::nullopt;
  switch (mode) {
    case SearchMode::AllHyperbolic:
      if (r == 2 && n >= 2) return DimensionBound{n - 1, "rank 2, all hyperbolic: dim <= n-1"};
      return std::nullopt;
    case SearchMode::DistinctRadicals:
      if (n >= 3 && n % 2 == 1 && r + 1 == n && q >= n)
        return DimensionBound{(n + 1) / 2, "rank n-1, n = 2m-1, distinct radicals, q >= n: dim <= m"};
      break;
    case SearchMode::AllPositive:
      if (r % 2 == 0 && r >= 2 && n >= r)
        return DimensionBound{n - r / 2, "rank 2t, all positive: dim <= n-t"};
      return std::nullopt;
    case SearchMode::Plain:
      break;
  }
  // Bounds valid for every constant rank space also bound the typed modes.
  std::optional<DimensionBound> best;
  auto offer = [&](std::size_t v, const char* rule) {
    if (!best || v < best->value) best = DimensionBound{v, rule};
  };
  if (r % 2 == 1) offer(r, "odd rank r: dim <= r");
  if (n >= 3 && n % 2 == 1 && r + 1 == n && q >= n) offer(n - 1, "n odd, rank n-1, q >= n: dim <= n-1");
  if (r == 4 && n >= 5 && q >= 5) offer(n - 1, "rank 4, n >= 5, q >= 5: dim <= n-1");
  if (mode == SearchMode::DistinctRadicals && best) return best;
  return best;
}

CheckResult check_dimension_bound(std::uint32_t q, std::size_t n, std::size_t r, SearchMode mode,
                                  const BoundOptions& options) {
  CheckResult res;
  res.name = "dimension_bound";
  res.params = {{"q", std::to_string(q)},
                {"n", std::to_string(n)},
                {"r", std::to_string(r)},
                {"mode", std::string(to_string(mode))}};
  SearchSpec spec;
  spec.q = q;
  spec.n = n;
  spec.r = r;
  spec.mode = mode;
  spec.budget = options.budget;
  spec.jobs = options.jobs;
  spec.rng_seed = options.rng_seed;
  spec.seed = options.seed;
  if (options.exhaustive) {
    spec.exhaustive = *options.exhaustive;
  } else {
    std::uint64_t total = 1;
    bool small = true;
    for (std::size_t i = 0; i < sym_coord_count(n) && small; ++i) small = (total *= q) <= (1ull << 20);
    spec.exhaustive = small;
  }
  res.params["search"] = spec.exhaustive ? "exhaustive" : "random";
  res.params["budget"] = std::to_string(spec.budget);
  if (spec.seed) res.params["seeded"] = "yes";

  const SearchOutcome out = max_constant_rank_dim(spec);
  res.counts["best_dim"] = static_cast<std::int64_t>(out.best_dim);
  res.counts["exhaustive_proof"] = out.exhaustive_proof;
  res.counts["nodes_visited"] = static_cast<std::int64_t>(out.nodes_visited);
  res.counts["from_seed"] = out.from_seed;
  res.label = out.exhaustive_proof ? "exhaustive" : "instance-verified";
  if (out.witness) {
    res.witnesses.push_back(format_form_space(*out.witness));
    if (!satisfies_mode(*out.witness, r, mode)) {
      res.status = CheckStatus::Fail;
      res.notes.push_back("search witness fails independent re-validation");
    }
  }
  const auto bound = dimension_bound(q, n, r, mode);
  if (!bound) {
    res.status = res.status == CheckStatus::Fail ? res.status : CheckStatus::Skipped;
    res.notes.push_back("no dimension bound applies at these parameters; best_dim is a lower bound");
    return res;
  }
  res.counts["bound"] = static_cast<std::int64_t>(bound->value);
  res.notes.push_back(bound->rule);
  if (out.best_dim > bound->value) {
    res.status = CheckStatus::Fail;
    res.notes.push_back("found a subspace above the bound");
  } else if (out.exhaustive_proof) {
    res.notes.push_back("maximum settled by complete traversal");
  } else {
    res.notes.push_back("budgeted search found no violation");
  }
  return res;
}

CheckResult check_bound_on_instance(const std::string& name, const FormSpace& m, SearchMode mode) {
  CheckResult r = start(name, m);
  r.label = "instance-verified";
  r.params["mode"] = std::string(to_string(mode));
  const auto cr = is_constant_rank(m);
  if (!cr) return skip(r, "hypothesis not met: M is not constant rank"), r;
  if (!satisfies_mode(m, *cr, mode)) return skip(r, "hypothesis not met: mode predicate fails"), r;
  const auto bound = dimension_bound(m.field().order(), m.n(), *cr, mode);
  r.counts["rank"] = static_cast<std::int64_t>(*cr);
  if (!bound) return skip(r, "no dimension bound applies to this instance"), r;
  r.counts["bound"] = static_cast<std::int64_t>(bound->value);
  r.notes.push_back(bound->rule);
  if (m.dim() > bound->value) fail(r, m, "dimension above the bound");
  return r;
}

std::vector<std::pair<std::string, FormSpace>> constructed_spaces() {
  std::vector<std::pair<std::string, FormSpace>> out;
  auto add = [&](std::string name, FormSpace m) { out.emplace_back(std::move(name), std::move(m)); };
  add("trace(3,3)", trace_space(3, 3).space);
  add("trace(5,4)", trace_space(5, 4).space);
  add("full_trace(5,3)", full_trace_space(5, 3));
  for (auto [q, r, n] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{
           {5, 3, 4}, {5, 3, 5}, {7, 3, 5}, {7, 5, 6}, {5, 4, 5}, {5, 4, 6}, {5, 1, 3}})
    add("inflate(full_trace(" + std::to_string(q) + "," + std::to_string(r) + ")," + std::to_string(n) + ")",
        inflate(full_trace_space(q, r), n));
  for (auto [q, n, m] : std::vector<std::tuple<std::uint32_t, std::size_t, unsigned>>{
           {3, 3, 2}, {5, 3, 2}, {3, 5, 3}, {7, 5, 3}, {3, 8, 3}, {5, 5, 3}})
    add("distinct_radical(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(m) + ")",
        distinct_radical_space(q, n, m).space);
  for (std::uint32_t q : {3u, 5u, 7u})
    for (std::size_t n : {2u, 3u, 4u, 5u})
      add("hyperbolic(" + std::to_string(q) + "," + std::to_string(n) + ")", hyperbolic_rank2_space(q, n));
  for (auto [q, n, t] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{
           {3, 4, 2}, {5, 5, 2}, {5, 6, 2}, {3, 6, 3}})
    add("positive2t(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(t) + ")",
        positive_rank2t_space(q, n, t));
  add("rank4_f3", rank4_f3_space().space);
  return out;
}

CheckResult count_formula_gate(const std::vector<std::pair<std::string, FormSpace>>& constructed,
                               std::size_t random_spaces, std::uint64_t rng_seed) {
  CheckResult r;
  r.name = "count_formula_gate";
  r.params["random_spaces"] = std::to_string(random_spaces);
  r.params["rng_seed"] = std::to_string(rng_seed);
  std::mt19937_64 rng(rng_seed);
  std::int64_t checked = 0, mismatches = 0;
  auto run = [&](const std::string& name, const FormSpace& m) {
    ++checked;
    const CensusReport rep = census_report(m);
    if (!rep.agreement) {
      ++mismatches;
      r.status = CheckStatus::Fail;
      r.notes.push_back(name + ": formula " + format_rational(rep.formula_value) + " vs enumeration " +
                        std::to_string(rep.common_isotropic_total));
      r.witnesses.push_back(format_form_space(m));
    }
  };
  for (std::size_t i = 0; i < random_spaces; ++i) {
    const std::uint32_t q = rng() % 2 ? 5 : 3;
    const std::size_t n = 1 + rng() % 5;
    const std::size_t len = sym_coord_count(n);
    const std::size_t d = 1 + rng() % std::min<std::size_t>(4, len);
    auto f = Field::of_order(q);
    while (true) {
      std::vector<SymForm> forms;
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<Elem> c(len);
        for (auto& x : c) x = static_cast<Elem>(rng() % q);
        forms.push_back(SymForm::from_upper(f, n, c));
      }
      bool nonzero = false;
      for (const auto& g : forms) nonzero = nonzero || !g.is_zero();
      if (!nonzero) continue;
      FormSpace m = FormSpace::span(forms);
      if (m.dim() != d) continue;
      run("random #" + std::to_string(i), m);
      break;
    }
  }
  for (const auto& [name, m] : constructed) run(name, m);
  r.counts["spaces_checked"] = checked;
  r.counts["random_spaces"] = static_cast<std::int64_t>(random_spaces);
  r.counts["constructed_spaces"] = static_cast<std::int64_t>(constructed.size());
  r.counts["mismatches"] = mismatches;
  return r;
}

namespace {

void core_suite(std::vector<CheckResult>& out, const std::vector<std::pair<std::string, FormSpace>>& spaces) {
  for (auto [q, n, m] : std::vector<std::tuple<std::uint32_t, std::size_t, unsigned>>{
           {3, 3, 2}, {5, 3, 2}, {3, 5, 3}, {7, 5, 3}, {3, 8, 3}})
    out.push_back(check_distinct_radical_construction(q, n, m));

  for (std::uint32_t q : {3u, 5u, 7u})
    for (std::size_t n : {3u, 4u, 5u}) {
      const std::uint64_t total = checked_pow(q, static_cast<std::uint32_t>(n - 1)) - 1;
      out.push_back(check_construction("hyperbolic_optimality", hyperbolic_rank2_space(q, n), 2,
                                       SearchMode::AllHyperbolic, n - 1, std::make_pair(total, std::uint64_t{0})));
    }
  for (auto [q, n, t] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{{3, 4, 2}, {5, 5, 2}}) {
    CheckResult c = check_construction("positive_rank2t", positive_rank2t_space(q, n, t), 2 * t,
                                       SearchMode::AllPositive, n - t);
    c.params["t"] = std::to_string(t);
    out.push_back(std::move(c));
  }

  out.push_back(check_partition_structure("spread(3,1)", spread(3, 1), 4, {{1, 4}}));
  out.push_back(check_partition_structure("spread(3,2)", spread(3, 2), 10, {{2, 10}}));
  out.push_back(check_partition_structure("spread(5,2)", spread(5, 2), 26, {{2, 26}}));
  out.push_back(check_partition_structure("odd_partition(3,1)", odd_partition(3, 1), 10, {{1, 9}, {2, 1}}));
  out.push_back(check_partition_structure("odd_partition(3,2)", odd_partition(3, 2), 28, {{2, 27}, {3, 1}}));

  for (const auto& [name, m] : spaces) {
    if (name == "rank4_f3") continue;
    for (CheckResult c : {check_radical_isotropy(m), check_common_radical(m), check_rank4_radical_intersections(m)}) {
      c.params["space"] = name;
      out.push_back(std::move(c));
    }
  }
}

void rank4_f3_suite(std::vector<CheckResult>& out) {
  out.push_back(rank4_f3_report());
  const FormSpace m = rank4_f3_space().space;
  for (CheckResult c : {check_count_formula(m), check_radical_isotropy(m), check_common_radical(m)}) {
    c.params["space"] = "rank4_f3";
    out.push_back(std::move(c));
  }
}

void bounds_suite(std::vector<CheckResult>& out, const std::vector<std::pair<std::string, FormSpace>>& spaces,
                  unsigned jobs) {
  BoundOptions ex;
  ex.exhaustive = true;
  ex.jobs = jobs;
  out.push_back(check_dimension_bound(3, 2, 2, SearchMode::AllHyperbolic, ex));
  out.push_back(check_dimension_bound(3, 3, 2, SearchMode::AllHyperbolic, ex));
  out.push_back(check_dimension_bound(5, 2, 2, SearchMode::AllHyperbolic, ex));
  out.push_back(check_dimension_bound(5, 3, 2, SearchMode::Plain, ex));
  out.push_back(check_dimension_bound(3, 3, 2, SearchMode::Plain, ex));

  BoundOptions rank4_seed;
  rank4_seed.exhaustive = false;
  rank4_seed.budget = 200'000;
  rank4_seed.jobs = jobs;
  rank4_seed.seed = rank4_f3_space().space;
  out.push_back(check_dimension_bound(3, 5, 4, SearchMode::Plain, rank4_seed));

  BoundOptions big;
  big.exhaustive = false;
  big.budget = 1'000'000;
  big.jobs = jobs;
  big.seed = positive_rank2t_space(5, 6, 2);
  out.push_back(check_dimension_bound(5, 6, 4, SearchMode::Plain, big));
  big.seed = distinct_radical_space(5, 5, 3).space;
  out.push_back(check_dimension_bound(5, 5, 4, SearchMode::DistinctRadicals, big));

  // Search-supplied constant rank 4 instances for the radical-intersection
  // analysis.
  SearchSpec s;
  s.q = 5;
  s.n = 5;
  s.r = 4;
  s.budget = 200'000;
  s.jobs = jobs;
  const SearchOutcome o = max_constant_rank_dim(s);
  if (o.witness) {
    CheckResult c = check_rank4_radical_intersections(*o.witness);
    c.params["space"] = "search(5,5,4)";
    c.witnesses.push_back(format_form_space(*o.witness));
    out.push_back(std::move(c));
    CheckResult b = check_bound_on_instance("bound_on_instance", *o.witness, SearchMode::Plain);
    b.params["space"] = "search(5,5,4)";
    out.push_back(std::move(b));
  }

  for (const auto& [name, m] : spaces) {
    const auto cr = is_constant_rank(m);
    if (!cr) continue;
    for (SearchMode mode : {SearchMode::Plain, SearchMode::AllHyperbolic, SearchMode::AllPositive,
                            SearchMode::DistinctRadicals}) {
      if (mode == SearchMode::AllHyperbolic && *cr != 2) continue;
      if (mode == SearchMode::AllPositive && *cr % 2 != 0) continue;
      if (mode == SearchMode::DistinctRadicals && *cr + 1 != m.n()) continue;
      if (mode != SearchMode::Plain && !satisfies_mode(m, *cr, mode)) continue;
      if (!dimension_bound(m.field().order(), m.n(), *cr, mode)) continue;
      CheckResult c = check_bound_on_instance("bound_on_instance", m, mode);
      c.params["space"] = name;
      out.push_back(std::move(c));
    }
  }
}

}  // namespace

std::vector<CheckResult> run_suite(std::string_view suite, unsigned jobs) {
  const bool core = suite == "core" || suite == "all";
  // "ward" is kept as an alias of "rank4-f3".
  const bool rank4 = suite == "rank4-f3" || suite == "ward" || suite == "all";
  const bool bounds = suite == "bounds" || suite == "all";
  if (!core && !rank4 && !bounds) throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  std::vector<CheckResult> out;
  std::vector<std::pair<std::string, FormSpace>> spaces;
  if (core || bounds) spaces = constructed_spaces();
  if (core) {
    // The counting formula is trusted elsewhere only after this gate.
    out.push_back(count_formula_gate(spaces));
    if (out.back().status == CheckStatus::Fail) return out;
    core_suite(out, spaces);
  }
  if (rank4) rank4_f3_suite(out);
  if (bounds) bounds_suite(out, spaces, jobs);
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

namespace {

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["params"] = r.params;
  j["status"] = std::string(to_string(r.status));
  j["label"] = r.label;
  j["counts"] = r.counts;
  j["notes"] = r.notes;
  j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace

std::string check_result_json(const CheckResult& r) { return to_json(r).dump(2); }

std::string check_results_json(const std::vector<CheckResult>& results) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) arr.push_back(to_json(r));
  return arr.dump(2);
}

}  // namespace crsym
