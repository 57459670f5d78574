// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace crsym {

namespace {

using nlohmann::json;

class Tokens {
 public:
  explicit Tokens(std::string_view text) : in_(std::string(text)) {}

  std::uint64_t next(const char* what) {
    std::string tok;
    if (!(in_ >> tok)) throw Error(ErrorCode::ParseError, std::string("unexpected end of input reading ") + what);
    std::uint64_t v = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw Error(ErrorCode::ParseError, "'" + tok + "' is not a non-negative integer");
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
      if (v > (1ull << 40)) throw Error(ErrorCode::ParseError, "'" + tok + "' is out of range");
    }
    return v;
  }

  void expect_end() {
    std::string tok;
    if (in_ >> tok) throw Error(ErrorCode::ParseError, "trailing data '" + tok + "'");
  }

 private:
  std::istringstream in_;
};

FieldPtr read_field_header(Tokens& t, std::uint64_t p, std::uint64_t k) {
  if (p > (1u << 31) || k == 0 || k > 64) throw Error(ErrorCode::ParseError, "bad field header");
  FieldPtr f = Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
  for (std::size_t i = 0; i <= k; ++i) {
    const auto d = t.next("modulus");
    if (d != f->modulus()[i])
      throw Error(ErrorCode::ParseError, "modulus differs from the canonical one for " + f->name());
  }
  return f;
}

std::vector<Elem> read_entries(Tokens& t, const Field& f, std::size_t count) {
  std::vector<Elem> out(count);
  for (auto& x : out) {
    const auto v = t.next("matrix entry");
    if (v >= f.order()) throw Error(ErrorCode::ParseError, "entry " + std::to_string(v) + " outside " + f.name());
    x = static_cast<Elem>(v);
  }
  return out;
}

void write_header(std::ostringstream& os, const Field& f, std::size_t a, std::size_t b) {
  os << f.characteristic() << ' ' << f.degree() << ' ' << a;
  if (b != static_cast<std::size_t>(-1)) os << ' ' << b;
  os << '\n';
  for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? " " : "") << f.modulus()[i];
  os << '\n';
}

void write_rows(std::ostringstream& os, std::span<const Elem> data, std::size_t rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) os << (j ? " " : "") << data[i * cols + j];
    os << '\n';
  }
}

json histogram(const std::map<std::size_t, std::uint64_t>& h) {
  json j = json::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return format_rational(r);
}

}  // namespace

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_form(const SymForm& f) {
  std::ostringstream os;
  write_header(os, f.field(), f.dim(), static_cast<std::size_t>(-1));
  write_rows(os, f.gram(), f.dim(), f.dim());
  return os.str();
}

SymForm parse_form(std::string_view text) {
  Tokens t(text);
  const auto p = t.next("p"), k = t.next("k"), n = t.next("n");
  if (n == 0 || n > 64) throw Error(ErrorCode::ParseError, "bad dimension");
  FieldPtr f = read_field_header(t, p, k);
  auto gram = read_entries(t, *f, n * n);
  t.expect_end();
  return SymForm(f, n, std::move(gram));
}

std::string format_form_space(const FormSpace& m) {
  std::ostringstream os;
  write_header(os, m.field(), m.n(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i) os << '\n';
    write_rows(os, m.basis()[i].gram(), m.n(), m.n());
  }
  return os.str();
}

FormSpace parse_form_space(std::string_view text) {
  Tokens t(text);
  const auto p = t.next("p"), k = t.next("k"), n = t.next("n"), d = t.next("d");
  if (n == 0 || n > 64) throw Error(ErrorCode::ParseError, "bad dimension");
  if (d == 0 || d > n * (n + 1) / 2) throw Error(ErrorCode::ParseError, "bad subspace dimension");
  FieldPtr f = read_field_header(t, p, k);
  std::vector<SymForm> forms;
  for (std::uint64_t i = 0; i < d; ++i) forms.emplace_back(f, n, read_entries(t, *f, n * n));
  t.expect_end();
  if (!f->is_odd()) throw Error(ErrorCode::EvenCharUnsupported, "forms need odd q");
  FormSpace m = FormSpace::span(forms);
  if (m.dim() != d) throw Error(ErrorCode::ParseError, "the forms are linearly dependent");
  return m;
}

std::string format_partition(const PartitionSpec& p) {
  std::ostringstream os;
  const std::size_t n = p.ambient.ambient_dim();
  write_header(os, *p.ambient.field(), n, p.pieces.size());
  for (const auto& piece : p.pieces) {
    os << piece.dim() << '\n';
    write_rows(os, piece.basis().data, piece.dim(), n);
  }
  return os.str();
}

PartitionSpec parse_partition(std::string_view text) {
  Tokens t(text);
  const auto p = t.next("p"), k = t.next("k"), n = t.next("n"), count = t.next("t");
  if (n == 0 || n > 64) throw Error(ErrorCode::ParseError, "bad dimension");
  FieldPtr f = read_field_header(t, p, k);
  PartitionSpec spec{VecSubspace::full(f, n), {}};
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto dim = t.next("piece dimension");
    if (dim > n) throw Error(ErrorCode::ParseError, "piece dimension exceeds n");
    Mat rows(dim, n);
    rows.data = read_entries(t, *f, dim * n);
    spec.pieces.push_back(VecSubspace::span(f, n, std::move(rows)));
  }
  t.expect_end();
  return spec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
}

std::string census_json(const CensusReport& r) {
  json j;
  j["q"] = r.q;
  j["n"] = r.n;
  j["d"] = r.d;
  j["rank_histogram"] = histogram(r.census.rank_histogram);
  j["A"] = r.census.positive;
  j["B"] = r.census.negative;
  j["common_isotropic_total"] = r.common_isotropic_total;
  j["formula_value"] = rational_json(r.formula_value);
  j["agreement"] = r.agreement;
  return j.dump(2);
}

std::string partition_report_json(const PartitionReport& r) {
  json j;
  j["valid"] = r.valid;
  j["t"] = r.t;
  j["nontrivial"] = r.nontrivial;
  j["min_bound"] = r.min_bound ? json(*r.min_bound) : json(nullptr);
  j["min_bound_satisfied"] = r.min_bound_satisfied;
  json dims = json::object();
  for (const auto& [d, c] : r.piece_dims) dims[std::to_string(d)] = c;
  j["piece_dims"] = dims;
  j["uncovered"] = r.uncovered;
  j["overcovered"] = r.overcovered;
  j["zero_pieces"] = r.zero_pieces;
  j["foreign_pieces"] = r.foreign_pieces;
  return j.dump(2);
}

std::string search_outcome_json(const SearchSpec& spec, const SearchOutcome& o) {
  json j;
  j["q"] = spec.q;
  j["n"] = spec.n;
  j["r"] = spec.r;
  j["mode"] = std::string(to_string(spec.mode));
  j["budget"] = spec.budget;
  j["exhaustive_requested"] = spec.exhaustive;
  j["rng_seed"] = spec.rng_seed;
  j["best_dim"] = o.best_dim;
  j["exhaustive_proof"] = o.exhaustive_proof;
  j["nodes_visited"] = o.nodes_visited;
  j["from_seed"] = o.from_seed;
  j["witness"] = o.witness ? json(format_form_space(*o.witness)) : json(nullptr);
  return j.dump(2);
}

std::string field_info_json(const Field& f) {
  json j;
  j["p"] = f.characteristic();
  j["k"] = f.degree();
  j["q"] = f.order();
  j["modulus"] = f.modulus();
  j["generator"] = f.generator();
  j["modulus_rule"] = kModulusRule;
  return j.dump(2);
}

}  // namespace crsym
