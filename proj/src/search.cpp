// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

namespace crsym {

std::string_view to_string(SearchMode m) noexcept {
  switch (m) {
    case SearchMode::Plain: return "plain";
    case SearchMode::AllHyperbolic: return "all_hyperbolic";
    case SearchMode::AllPositive: return "all_positive";
    case SearchMode::DistinctRadicals: return "distinct_radicals";
  }
  return "?";
}

SearchMode parse_search_mode(std::string_view s) {
  std::string t(s);
  std::replace(t.begin(), t.end(), '-', '_');
  if (t == "plain") return SearchMode::Plain;
  if (t == "all_hyperbolic") return SearchMode::AllHyperbolic;
  if (t == "all_positive") return SearchMode::AllPositive;
  if (t == "distinct_radicals") return SearchMode::DistinctRadicals;
  throw Error(ErrorCode::InvalidArgument, "unknown search mode '" + std::string(s) + "'");
}

namespace {

constexpr std::size_t kMaxN = 16;
constexpr std::size_t kUnits = 64;
constexpr std::uint64_t kTableLimit = 1ull << 22;

// Byte tables for F_q, q < 256.
struct SmallField {
  std::uint32_t q = 0;
  std::vector<std::uint8_t> add, mul, neg, inv;
  std::vector<bool> square;

  explicit SmallField(const Field& f) : q(f.order()), add(q * q), mul(q * q), neg(q), inv(q), square(q) {
    for (Elem a = 0; a < q; ++a) {
      neg[a] = static_cast<std::uint8_t>(f.neg(a));
      if (a) inv[a] = static_cast<std::uint8_t>(f.inv(a));
      square[a] = a != 0 && f.is_square(a);
      for (Elem b = 0; b < q; ++b) {
        add[a * q + b] = static_cast<std::uint8_t>(f.add(a, b));
        mul[a * q + b] = static_cast<std::uint8_t>(f.mul(a, b));
      }
    }
  }
  std::uint8_t ad(std::uint8_t a, std::uint8_t b) const { return add[a * q + b]; }
  std::uint8_t mu(std::uint8_t a, std::uint8_t b) const { return mul[a * q + b]; }
  std::uint8_t su(std::uint8_t a, std::uint8_t b) const { return add[a * q + neg[b]]; }
};

struct Analysis {
  std::uint8_t rank = 0;
  std::int8_t type = 0;  // +1 positive, -1 negative, 0 otherwise
  std::uint64_t radical = 0;  // id of the radical line when nullity is 1
};

using Coords = std::vector<std::uint8_t>;

class Analyzer {
 public:
  Analyzer(const SmallField& f, std::size_t n) : f_(f), n_(n) {}

  // Rank and type from the upper-triangle coordinates.
  Analysis analyze(const std::uint8_t* c, bool want_radical) const {
    std::array<std::array<std::uint8_t, kMaxN>, kMaxN> g{};
    load(c, g);
    Analysis a;
    rank_type(g, a);
    if (want_radical && std::size_t{a.rank} + 1 == n_) {
      load(c, g);
      a.radical = radical_line(g);
    }
    return a;
  }

 private:
  using Grid = std::array<std::array<std::uint8_t, kMaxN>, kMaxN>;

  void load(const std::uint8_t* c, Grid& g) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) g[i][j] = g[j][i] = c[k++];
  }

  void rank_type(Grid& g, Analysis& out) const {
    const std::size_t n = n_;
    std::uint8_t disc = 1;
    std::size_t rk = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i][i] == 0) {
        std::size_t j = i + 1;
        while (j < n && g[j][j] == 0) ++j;
        if (j < n) {
          std::swap(g[i], g[j]);
          for (std::size_t l = 0; l < n; ++l) std::swap(g[l][i], g[l][j]);
        } else {
          j = i + 1;
          while (j < n && g[i][j] == 0) ++j;
          if (j == n) continue;
          for (std::size_t l = i; l < n; ++l) g[i][l] = f_.ad(g[i][l], g[j][l]);
          for (std::size_t l = i; l < n; ++l) g[l][i] = f_.ad(g[l][i], g[l][j]);
        }
      }
      const std::uint8_t d = g[i][i];
      ++rk;
      disc = f_.mu(disc, d);
      const std::uint8_t dinv = f_.inv[d];
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::uint8_t c = f_.mu(g[j][i], dinv);
        if (c == 0) continue;
        for (std::size_t l = j; l < n; ++l) {
          g[j][l] = f_.su(g[j][l], f_.mu(c, g[i][l]));
          g[l][j] = g[j][l];
        }
      }
      for (std::size_t j = i + 1; j < n; ++j) g[i][j] = g[j][i] = 0;
    }
    out.rank = static_cast<std::uint8_t>(rk);
    if (rk == 0 || rk % 2 == 1) {
      out.type = 0;
      return;
    }
    std::uint8_t v = disc;
    if ((rk / 2) % 2 == 1) v = f_.neg[v];
    out.type = f_.square[v] ? 1 : -1;
  }

  // Normalized generator of a one-dimensional null space, as a base-q index.
  std::uint64_t radical_line(Grid& g) const {
    const std::size_t n = n_;
    std::array<std::size_t, kMaxN> pivcol{};
    std::array<bool, kMaxN> is_piv{};
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
      std::size_t p = row;
      while (p < n && g[p][col] == 0) ++p;
      if (p == n) continue;
      std::swap(g[p], g[row]);
      const std::uint8_t inv = f_.inv[g[row][col]];
      for (std::size_t l = 0; l < n; ++l) g[row][l] = f_.mu(g[row][l], inv);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == row || g[r][col] == 0) continue;
        const std::uint8_t c = g[r][col];
        for (std::size_t l = 0; l < n; ++l) g[r][l] = f_.su(g[r][l], f_.mu(c, g[row][l]));
      }
      pivcol[row] = col;
      is_piv[col] = true;
      ++row;
    }
    std::size_t free = 0;
    while (free < n && is_piv[free]) ++free;
    std::array<std::uint8_t, kMaxN> v{};
    v[free] = 1;
    for (std::size_t r = 0; r < row; ++r) v[pivcol[r]] = f_.neg[g[r][free]];
    std::size_t first = 0;
    while (v[first] == 0) ++first;
    const std::uint8_t s = f_.inv[v[first]];
    std::uint64_t id = 0;
    for (std::size_t i = n; i-- > 0;) id = id * f_.q + f_.mu(v[i], s);
    return id;
  }

  const SmallField& f_;
  std::size_t n_;
};

std::uint64_t index_of(const std::uint8_t* c, std::size_t len, std::uint32_t q) {
  std::uint64_t id = 0;
  for (std::size_t i = len; i-- > 0;) id = id * q + c[i];
  return id;
}

// Shared, read-only context of one search.
struct Engine {
  const SearchSpec& spec;
  FieldPtr field;
  SmallField sf;
  Analyzer an;
  std::size_t len;  // n(n+1)/2
  bool want_radical;
  // Packed per-vector analysis when q^len is small: rank | (type + 1) << 5.
  std::vector<std::uint8_t> table;
  std::vector<std::uint64_t> radical_table;

  Engine(const SearchSpec& s, FieldPtr f)
      : spec(s),
        field(std::move(f)),
        sf(*field),
        an(sf, s.n),
        len(sym_coord_count(s.n)),
        want_radical(s.mode == SearchMode::DistinctRadicals) {}

  void build_table() {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < len; ++i) {
      total *= spec.q;
      if (total > kTableLimit) return;
    }
    table.resize(total);
    if (want_radical) radical_table.resize(total);
    Coords c(len, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const Analysis a = an.analyze(c.data(), want_radical);
      table[idx] = static_cast<std::uint8_t>(a.rank | ((a.type + 1) << 5));
      if (want_radical) radical_table[idx] = a.radical;
      std::size_t i = 0;
      while (i < len && ++c[i] == spec.q) c[i++] = 0;
    }
  }

  Analysis lookup(const std::uint8_t* c) const {
    if (table.empty()) return an.analyze(c, want_radical);
    const std::uint64_t idx = index_of(c, len, spec.q);
    Analysis a;
    a.rank = table[idx] & 31;
    a.type = static_cast<std::int8_t>((table[idx] >> 5) - 1);
    if (want_radical) a.radical = radical_table[idx];
    return a;
  }

  bool element_ok(const Analysis& a) const {
    if (a.rank != spec.r) return false;
    if (spec.mode == SearchMode::AllHyperbolic || spec.mode == SearchMode::AllPositive) return a.type == 1;
    return true;
  }
};

// A partial basis together with its span and, for the distinct-radical
// mode, the sorted radicals of its projective points.
struct Partial {
  std::vector<Coords> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::vector<std::uint8_t>> spans;    // spans[d]: q^d * len
  std::vector<std::vector<std::uint64_t>> radicals;  // radicals[d], sorted

  explicit Partial(std::size_t len) : spans{Coords(len, 0)}, radicals{{}} {}
  std::size_t depth() const { return rows.size(); }
  void clear() {
    rows.clear();
    pivots.clear();
    spans.resize(1);
    radicals.resize(1);
  }
};

// Tests candidate + m for every m in the current span. On success the
// radicals of the new points are left in new_radicals.
bool gate(const Engine& e, const Partial& p, const std::uint8_t* cand, std::vector<std::uint64_t>& new_radicals) {
  const auto& span = p.spans.back();
  const std::size_t count = span.size() / e.len;
  std::array<std::uint8_t, kMaxN*(kMaxN + 1) / 2> w{};
  new_radicals.clear();
  for (std::size_t s = 0; s < count; ++s) {
    const std::uint8_t* m = span.data() + s * e.len;
    for (std::size_t i = 0; i < e.len; ++i) w[i] = e.sf.ad(cand[i], m[i]);
    const Analysis a = e.lookup(w.data());
    if (!e.element_ok(a)) return false;
    if (e.want_radical) new_radicals.push_back(a.radical);
  }
  if (e.want_radical) {
    std::sort(new_radicals.begin(), new_radicals.end());
    if (std::adjacent_find(new_radicals.begin(), new_radicals.end()) != new_radicals.end()) return false;
    const auto& old = p.radicals.back();
    std::vector<std::uint64_t> both;
    std::set_intersection(old.begin(), old.end(), new_radicals.begin(), new_radicals.end(), std::back_inserter(both));
    if (!both.empty()) return false;
  }
  return true;
}

void push(const Engine& e, Partial& p, const std::uint8_t* cand, std::size_t pivot,
          const std::vector<std::uint64_t>& new_radicals) {
  const auto& span = p.spans.back();
  std::vector<std::uint8_t> next;
  next.reserve(span.size() * e.spec.q);
  next.insert(next.end(), span.begin(), span.end());
  const std::size_t count = span.size() / e.len;
  for (std::uint32_t a = 1; a < e.spec.q; ++a)
    for (std::size_t s = 0; s < count; ++s)
      for (std::size_t i = 0; i < e.len; ++i)
        next.push_back(e.sf.ad(e.sf.mu(static_cast<std::uint8_t>(a), cand[i]), span[s * e.len + i]));
  p.spans.push_back(std::move(next));
  if (e.want_radical) {
    std::vector<std::uint64_t> merged;
    std::merge(p.radicals.back().begin(), p.radicals.back().end(), new_radicals.begin(), new_radicals.end(),
               std::back_inserter(merged));
    p.radicals.push_back(std::move(merged));
  } else {
    p.radicals.emplace_back();
  }
  p.rows.emplace_back(cand, cand + e.len);
  p.pivots.push_back(pivot);
}

void pop(Partial& p) {
  p.rows.pop_back();
  p.pivots.pop_back();
  p.spans.pop_back();
  p.radicals.pop_back();
}

struct Event {
  std::uint64_t node = 0;
  std::vector<Coords> rows;
};

struct UnitResult {
  std::uint64_t nodes = 0;
  bool complete = true;
  std::vector<Event> events;  // strictly increasing depth
};

struct BudgetHit {};

// Depth-first traversal of canonical (echelon) bases. Rows are added with
// strictly decreasing pivot columns; a new row is 1 at its pivot, 0 before
// it and 0 at every earlier pivot, so each subspace is met exactly once.
class Dfs {
 public:
  Dfs(const Engine& e, std::size_t best, std::uint64_t cap) : e_(e), best_(best), cap_(cap), p_(e.len) {}

  UnitResult run(const std::vector<Coords>& roots, const std::vector<std::size_t>& root_pivots) {
    try {
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (1 + root_pivots[i] <= best_) continue;
        std::vector<std::uint64_t> rads;
        if (e_.want_radical) {
          rads.push_back(e_.lookup(roots[i].data()).radical);
        }
        push(e_, p_, roots[i].data(), root_pivots[i], rads);
        improve();
        descend(root_pivots[i]);
        pop(p_);
      }
    } catch (const BudgetHit&) {
      res_.complete = false;
    }
    res_.nodes = nodes_;
    return std::move(res_);
  }

 private:
  void improve() {
    if (p_.depth() > best_) {
      best_ = p_.depth();
      res_.events.push_back({nodes_, p_.rows});
    }
  }

  void descend(std::size_t p_last) {
    const std::size_t depth = p_.depth();
    std::vector<std::uint64_t> rads;
    for (std::size_t piv = p_last; piv-- > 0;) {
      if (depth + 1 + piv <= best_) break;
      // Free positions: after the pivot, skipping chosen pivots.
      std::vector<std::size_t> free;
      for (std::size_t j = piv + 1; j < e_.len; ++j)
        if (std::find(p_.pivots.begin(), p_.pivots.end(), j) == p_.pivots.end()) free.push_back(j);
      Coords cand(e_.len, 0);
      cand[piv] = 1;
      std::vector<std::uint8_t> digits(free.size(), 0);
      while (true) {
        if (nodes_ >= cap_) throw BudgetHit{};
        ++nodes_;
        if (gate(e_, p_, cand.data(), rads)) {
          push(e_, p_, cand.data(), piv, rads);
          improve();
          descend(piv);
          pop(p_);
          if (depth + 1 + piv <= best_) break;
        }
        std::size_t i = 0;
        while (i < free.size() && ++digits[i] == e_.spec.q) {
          digits[i] = 0;
          cand[free[i]] = 0;
          ++i;
        }
        if (i == free.size()) break;
        cand[free[i]] = digits[i];
      }
    }
  }

  const Engine& e_;
  std::size_t best_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  Partial p_;
  UnitResult res_;
};

FormSpace to_space(const Engine& e, const std::vector<Coords>& rows) {
  std::vector<SymForm> forms;
  for (const auto& r : rows) {
    std::vector<Elem> c(r.begin(), r.end());
    forms.push_back(SymForm::from_upper(e.field, e.spec.n, c));
  }
  return FormSpace::span(forms);
}

std::size_t seed_dim(const SearchSpec& spec) { return spec.seed ? spec.seed->dim() : 0; }

template <class Fn>
void run_parallel(std::size_t count, unsigned jobs, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

SearchOutcome exhaustive_search(const SearchSpec& spec, Engine& e) {
  SearchOutcome out;
  const std::size_t start = seed_dim(spec);
  e.build_table();

  // Root candidates: every monic vector whose form passes alone.
  std::vector<Coords> roots;
  std::vector<std::size_t> root_piv;
  std::uint64_t nodes = 0;
  bool complete = true;
  {
    Partial empty(e.len);
    std::vector<std::uint64_t> rads;
    for (std::size_t piv = e.len; piv-- > 0 && complete;) {
      Coords cand(e.len, 0);
      cand[piv] = 1;
      const std::size_t nfree = e.len - 1 - piv;
      std::vector<std::uint8_t> digits(nfree, 0);
      while (true) {
        if (nodes >= spec.budget) {
          complete = false;
          break;
        }
        ++nodes;
        if (gate(e, empty, cand.data(), rads)) {
          roots.push_back(cand);
          root_piv.push_back(piv);
        }
        std::size_t i = 0;
        while (i < nfree && ++digits[i] == spec.q) {
          digits[i] = 0;
          cand[piv + 1 + i] = 0;
          ++i;
        }
        if (i == nfree) break;
        cand[piv + 1 + i] = digits[i];
      }
    }
  }

  std::size_t best = start;
  std::optional<std::vector<Coords>> best_rows;
  if (complete) {
    const std::uint64_t remaining = spec.budget - nodes;
    const std::size_t units = std::min<std::size_t>(kUnits, roots.size());
    std::vector<std::optional<UnitResult>> results(units);
    std::mutex mu;
    run_parallel(units, spec.jobs, [&](std::size_t u) {
      const std::size_t lo = roots.size() * u / units, hi = roots.size() * (u + 1) / units;
      // An upper bound on this unit's share of the budget: whatever earlier,
      // already finished units left over.
      std::uint64_t cap = remaining;
      {
        std::lock_guard<std::mutex> lock(mu);
        std::uint64_t used = 0;
        for (std::size_t j = 0; j < u; ++j)
          if (results[j]) used += results[j]->nodes;
        cap = used >= remaining ? 0 : remaining - used;
      }
      UnitResult r;
      if (cap > 0) {
        std::vector<Coords> rs(roots.begin() + lo, roots.begin() + hi);
        std::vector<std::size_t> ps(root_piv.begin() + lo, root_piv.begin() + hi);
        r = Dfs(e, start, cap).run(rs, ps);
      } else {
        r.complete = false;
      }
      std::lock_guard<std::mutex> lock(mu);
      results[u] = std::move(r);
    });

    // Deterministic merge: replay the units in order against the budget.
    std::uint64_t left = remaining;
    for (std::size_t u = 0; u < units; ++u) {
      const UnitResult& r = *results[u];
      const std::uint64_t allowed = left;
      for (const auto& ev : r.events)
        if (ev.node <= allowed && ev.rows.size() > best) {
          best = ev.rows.size();
          best_rows = ev.rows;
        }
      const bool done = r.complete && r.nodes <= allowed;
      if (!done) complete = false;
      const std::uint64_t used = std::min(r.nodes, allowed);
      nodes += used;
      left -= used;
    }
  }

  out.nodes_visited = nodes;
  out.exhaustive_proof = complete;
  out.best_dim = best;
  if (best_rows) {
    out.witness = to_space(e, *best_rows);
  } else if (spec.seed) {
    out.witness = spec.seed;
    out.from_seed = true;
  }
  return out;
}

// Random generation of candidate forms as upper-triangle coordinates.
class Generator {
 public:
  Generator(const Engine& e, std::mt19937_64& rng) : e_(e), f_(*e.field), rng_(rng) {}

  Elem uniform() { return static_cast<Elem>(rng_() % e_.spec.q); }
  Elem nonzero() { return static_cast<Elem>(1 + rng_() % (e_.spec.q - 1)); }

  // P D P^T with the r columns of P drawn from the row space of `allowed`.
  std::optional<Coords> form_from(const Mat& allowed) {
    const std::size_t n = e_.spec.n, r = e_.spec.r;
    if (allowed.rows < r) return std::nullopt;
    Mat p(n, r);
    for (std::size_t c = 0; c < r; ++c)
      for (std::size_t a = 0; a < allowed.rows; ++a) {
        const Elem coef = uniform();
        if (!coef) continue;
        for (std::size_t i = 0; i < n; ++i) p(i, c) = f_.add(p(i, c), f_.mul(coef, allowed(a, i)));
      }
    if (crsym::rank(f_, p) != r) return std::nullopt;
    std::vector<Elem> d(r);
    for (auto& x : d) x = nonzero();
    Coords out;
    out.reserve(e_.len);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Elem s = 0;
        for (std::size_t c = 0; c < r; ++c) s = f_.add(s, f_.mul(d[c], f_.mul(p(i, c), p(j, c))));
        out.push_back(static_cast<std::uint8_t>(s));
      }
    return out;
  }

  std::optional<Coords> any() { return form_from(Mat::identity(e_.spec.n)); }

  // A form whose radical contains a subspace U of the radical R of an
  // existing element: U = R when `whole`, otherwise a random subspace of
  // codimension at least one in R.
  std::optional<Coords> near(const Partial& p, bool whole) {
    const auto& span = p.spans.back();
    const std::size_t count = span.size() / e_.len;
    if (count < 2) return any();
    const std::size_t pick = 1 + rng_() % (count - 1);
    std::vector<Elem> c(span.begin() + pick * e_.len, span.begin() + (pick + 1) * e_.len);
    const VecSubspace rad = radical(SymForm::from_upper(e_.field, e_.spec.n, c));
    Mat u(0, e_.spec.n);
    const std::size_t keep = whole ? rad.dim() : (rad.dim() == 0 ? 0 : rad.dim() - 1);
    for (std::size_t k = 0; k < keep; ++k) {
      std::vector<Elem> v(e_.spec.n, 0);
      for (std::size_t a = 0; a < rad.dim(); ++a) axpy(f_, uniform(), rad.basis_vector(a), v);
      u.append_row(v);
    }
    const VecSubspace us = VecSubspace::span(e_.field, e_.spec.n, std::move(u));
    return form_from(us.annihilator().basis());
  }

 private:
  const Engine& e_;
  const Field& f_;
  std::mt19937_64& rng_;
};

std::size_t pivot_of(const Coords& c) {
  std::size_t i = 0;
  while (i < c.size() && c[i] == 0) ++i;
  return i;
}

SearchOutcome random_search(const SearchSpec& spec, Engine& e) {
  e.build_table();
  const std::size_t start = seed_dim(spec);
  std::vector<Coords> seed_rows;
  if (spec.seed) {
    const Mat& cm = spec.seed->coordinate_matrix();
    for (std::size_t i = 0; i < cm.rows; ++i) seed_rows.emplace_back(cm.row(i).begin(), cm.row(i).end());
  }
  const std::size_t units = kUnits;
  std::vector<UnitResult> results(units);

  run_parallel(units, spec.jobs, [&](std::size_t u) {
    const std::uint64_t budget = spec.budget / units + (u < spec.budget % units ? 1 : 0);
    std::seed_seq seq{static_cast<std::uint32_t>(spec.rng_seed), static_cast<std::uint32_t>(spec.rng_seed >> 32),
                      static_cast<std::uint32_t>(u)};
    std::mt19937_64 rng(seq);
    Generator gen(e, rng);
    Partial p(e.len);
    UnitResult& res = results[u];
    std::size_t best = start;
    std::size_t fails = 0;
    std::vector<std::uint64_t> rads;

    auto restart = [&] {
      p.clear();
      fails = 0;
      if (!seed_rows.empty() && rng() % 4 == 0) {
        // Keep a random part of the seed and try to grow it differently.
        const std::size_t keep = rng() % seed_rows.size();
        for (std::size_t i = 0; i < keep; ++i) {
          if (!gate(e, p, seed_rows[i].data(), rads)) break;
          push(e, p, seed_rows[i].data(), pivot_of(seed_rows[i]), rads);
        }
      }
    };

    while (res.nodes < budget) {
      std::optional<Coords> cand;
      const auto roll = rng() % 8;
      if (p.depth() == 0 || roll < 3) cand = gen.any();
      else if (roll < 6) cand = gen.near(p, false);
      else cand = gen.near(p, true);
      ++res.nodes;  // a failed draw costs a node too, so the loop always ends
      if (!cand) continue;
      if (gate(e, p, cand->data(), rads)) {
        push(e, p, cand->data(), pivot_of(*cand), rads);
        fails = 0;
        if (p.depth() > best) {
          best = p.depth();
          res.events.push_back({res.nodes, p.rows});
        }
      } else if (++fails > 64 + 32 * p.depth()) {
        restart();
      }
    }
  });

  SearchOutcome out;
  out.best_dim = start;
  std::optional<std::vector<Coords>> best_rows;
  for (const auto& r : results) {
    out.nodes_visited += r.nodes;
    if (!r.events.empty() && r.events.back().rows.size() > out.best_dim) {
      out.best_dim = r.events.back().rows.size();
      best_rows = r.events.back().rows;
    }
  }
  out.exhaustive_proof = false;
  if (best_rows) {
    out.witness = to_space(e, *best_rows);
  } else if (spec.seed) {
    out.witness = spec.seed;
    out.from_seed = true;
  }
  return out;
}

}  // namespace

void validate(const SearchSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxN) throw Error(ErrorCode::InvalidArgument, "n must lie in [1, 16]");
  if (spec.r < 1 || spec.r > spec.n) throw Error(ErrorCode::InvalidArgument, "need 1 <= r <= n");
  auto f = Field::of_order(spec.q);
  if (!f->is_odd()) throw Error(ErrorCode::EvenCharUnsupported, "search needs odd q");
  if (spec.q >= 256) throw Error(ErrorCode::Unsupported, "search supports q < 256");
  if (spec.mode == SearchMode::AllHyperbolic && spec.r != 2)
    throw Error(ErrorCode::InvalidArgument, "hyperbolic mode needs r = 2");
  if (spec.mode == SearchMode::AllPositive && spec.r % 2 != 0)
    throw Error(ErrorCode::InvalidArgument, "positive mode needs even r");
  if (spec.mode == SearchMode::DistinctRadicals && spec.r + 1 != spec.n)
    throw Error(ErrorCode::InvalidArgument, "distinct-radical mode needs r = n - 1");
  if (spec.seed) {
    if (spec.seed->field().order() != spec.q || spec.seed->n() != spec.n)
      throw Error(ErrorCode::DimensionMismatch, "seed lives over another field or dimension");
    if (!satisfies_mode(*spec.seed, spec.r, spec.mode))
      throw Error(ErrorCode::RankMismatch, "seed does not satisfy the search predicate");
  }
}

SearchOutcome max_constant_rank_dim(const SearchSpec& spec) {
  validate(spec);
  Engine e(spec, Field::of_order(spec.q));
  return spec.exhaustive ? exhaustive_search(spec, e) : random_search(spec, e);
}

bool incremental_rank_gate(const FormSpace& partial, const SymForm& candidate, std::size_t r) {
  if (candidate.dim() != partial.n() || !candidate.field().same_as(partial.field()))
    throw Error(ErrorCode::DimensionMismatch, "candidate does not match the partial space");
  bool ok = true;
  for_each_span_element(partial, [&](std::span<const Elem>, const SymForm& m) {
    if (ok && rank(candidate + m) != r) ok = false;
  });
  return ok;
}

bool satisfies_mode(const FormSpace& m, std::size_t r, SearchMode mode) {
  const auto cr = is_constant_rank(m);
  if (!cr || *cr != r) return false;
  switch (mode) {
    case SearchMode::Plain: return true;
    case SearchMode::AllHyperbolic: {
      bool ok = true;
      for_each_span_element(m, [&](std::span<const Elem> c, const SymForm& f) {
        if (ok && !is_zero(c) && !is_hyperbolic_rank2(f)) ok = false;
      });
      return ok;
    }
    case SearchMode::AllPositive: {
      const TypeCensus c = type_census(m);
      return c.negative == 0 && c.positive + 1 == m.size();
    }
    case SearchMode::DistinctRadicals: {
      // Each radical line may carry at most one projective point.
      const RadicalProfile prof = radical_profile(m);
      const std::uint64_t q = m.field().order();
      for (const auto& [rad, count] : prof.groups)
        if (count != q - 1) return false;
      return true;
    }
  }
  return false;
}

}  // namespace crsym
