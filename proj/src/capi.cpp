// Copyright 2026 The crsym Authors
// SPDX-License-Identifier: Apache-2.0

#include "crsym/crsym.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "crsym/construct.hpp"
#include "crsym/io.hpp"
#include "crsym/verify.hpp"

struct crsym_field {
  crsym::FieldPtr f;
};

struct crsym_formspace {
  crsym::FormSpace m;
};

struct crsym_partition {
  crsym::PartitionSpec p;
};

namespace {

thread_local std::string last_error;

crsym_status set_error(crsym_status s, const char* what) {
  last_error = what;
  return s;
}

template <class Fn>
crsym_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return CRSYM_OK;
  } catch (const crsym::Error& e) {
    return set_error(static_cast<crsym_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CRSYM_ERR_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CRSYM_ERR_UNKNOWN, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw crsym::Error(crsym::ErrorCode::InvalidArgument, what);
}

std::uint32_t small_q(std::uint64_t q) {
  require(q > 1 && q < (1ull << 31), "q out of range");
  return static_cast<std::uint32_t>(q);
}

}  // namespace

extern "C" {

const char* crsym_version(void) { return "0.1.0"; }

const char* crsym_modulus_rule(void) { return crsym::kModulusRule; }

const char* crsym_status_name(crsym_status status) {
  if (status == CRSYM_OK) return "ok";
  if (status >= 1 && status <= 20) return crsym::to_string(static_cast<crsym::ErrorCode>(status));
  return "unknown";
}

const char* crsym_last_error(void) { return last_error.c_str(); }

void crsym_string_free(char* s) { std::free(s); }

crsym_status crsym_field_parse(const char* spec, crsym_field** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = new crsym_field{crsym::Field::parse(spec)};
  });
}

void crsym_field_destroy(crsym_field* f) { delete f; }

uint32_t crsym_field_order(const crsym_field* f) { return f ? f->f->order() : 0; }

crsym_status crsym_field_info_json(const crsym_field* f, char** json) {
  return guarded([&] {
    require(f && json, "null argument");
    *json = dup(crsym::field_info_json(*f->f));
  });
}

crsym_status crsym_field_arith(const crsym_field* f, crsym_arith_op op, uint32_t a, uint64_t b, uint32_t* out) {
  return guarded([&] {
    require(f && out, "null argument");
    const crsym::Field& k = *f->f;
    require(k.contains(a), "operand outside the field");
    if (op != CRSYM_OP_INV && op != CRSYM_OP_POW) require(b < k.order(), "operand outside the field");
    const auto bb = static_cast<crsym::Elem>(b);
    switch (op) {
      case CRSYM_OP_ADD: *out = k.add(a, bb); break;
      case CRSYM_OP_SUB: *out = k.sub(a, bb); break;
      case CRSYM_OP_MUL: *out = k.mul(a, bb); break;
      case CRSYM_OP_INV: *out = k.inv(a); break;
      case CRSYM_OP_POW: *out = k.pow(a, b); break;
      default: require(false, "unknown operation");
    }
  });
}

crsym_status crsym_construct_space(const char* kind, const crsym_construct_params* params, crsym_formspace** out) {
  return guarded([&] {
    require(kind && out, "null argument");
    const std::string k = kind;
    if (k == "rank4-f3" || k == "ward") {
      *out = new crsym_formspace{crsym::rank4_f3_space().space};
      return;
    }
    require(params != nullptr, "null parameters");
    const std::uint32_t q = small_q(params->q);
    if (k == "trace") {
      *out = new crsym_formspace{crsym::trace_space(q, params->n).space};
    } else if (k == "distinct-radical") {
      *out = new crsym_formspace{crsym::distinct_radical_space(q, params->n, params->m).space};
    } else if (k == "hyperbolic") {
      *out = new crsym_formspace{crsym::hyperbolic_rank2_space(q, params->n)};
    } else if (k == "positive2t") {
      *out = new crsym_formspace{crsym::positive_rank2t_space(q, params->n, params->t)};
    } else {
      require(false, "unknown construction kind");
    }
  });
}

crsym_status crsym_construct_partition(const char* kind, const crsym_construct_params* params,
                                       crsym_partition** out) {
  return guarded([&] {
    require(kind && params && out, "null argument");
    const std::string k = kind;
    const std::uint32_t q = small_q(params->q);
    if (k == "spread") {
      *out = new crsym_partition{crsym::spread(q, params->m)};
    } else if (k == "odd-partition") {
      *out = new crsym_partition{crsym::odd_partition(q, params->m)};
    } else {
      require(false, "unknown partition kind");
    }
  });
}

crsym_status crsym_formspace_parse(const char* text, crsym_formspace** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new crsym_formspace{crsym::parse_form_space(text)};
  });
}

crsym_status crsym_formspace_load(const char* path, crsym_formspace** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new crsym_formspace{crsym::parse_form_space(crsym::read_file(path))};
  });
}

crsym_status crsym_formspace_format(const crsym_formspace* m, char** text) {
  return guarded([&] {
    require(m && text, "null argument");
    *text = dup(crsym::format_form_space(m->m));
  });
}

crsym_status crsym_formspace_save(const crsym_formspace* m, const char* path) {
  return guarded([&] {
    require(m && path, "null argument");
    crsym::write_file(path, crsym::format_form_space(m->m));
  });
}

void crsym_formspace_destroy(crsym_formspace* m) { delete m; }

size_t crsym_formspace_dim(const crsym_formspace* m) { return m ? m->m.dim() : 0; }

size_t crsym_formspace_n(const crsym_formspace* m) { return m ? m->m.n() : 0; }

crsym_status crsym_census_json(const crsym_formspace* m, char** json, int* agreement) {
  return guarded([&] {
    require(m && json, "null argument");
    const crsym::CensusReport r = crsym::census_report(m->m);
    *json = dup(crsym::census_json(r));
    if (agreement) *agreement = r.agreement;
  });
}

crsym_status crsym_partition_parse(const char* text, crsym_partition** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new crsym_partition{crsym::parse_partition(text)};
  });
}

crsym_status crsym_partition_load(const char* path, crsym_partition** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = new crsym_partition{crsym::parse_partition(crsym::read_file(path))};
  });
}

crsym_status crsym_partition_format(const crsym_partition* p, char** text) {
  return guarded([&] {
    require(p && text, "null argument");
    *text = dup(crsym::format_partition(p->p));
  });
}

crsym_status crsym_partition_save(const crsym_partition* p, const char* path) {
  return guarded([&] {
    require(p && path, "null argument");
    crsym::write_file(path, crsym::format_partition(p->p));
  });
}

void crsym_partition_destroy(crsym_partition* p) { delete p; }

crsym_status crsym_partition_check_json(const crsym_partition* p, char** json, int* valid) {
  return guarded([&] {
    require(p && json, "null argument");
    const crsym::PartitionReport r = crsym::check_partition(p->p);
    *json = dup(crsym::partition_report_json(r));
    if (valid) *valid = r.valid;
  });
}

crsym_status crsym_verify_suite_json(const char* suite, unsigned jobs, char** json, int* all_passed) {
  return guarded([&] {
    require(suite && json, "null argument");
    const auto results = crsym::run_suite(suite, jobs == 0 ? 1 : jobs);
    *json = dup(crsym::check_results_json(results));
    if (all_passed) *all_passed = crsym::all_passed(results);
  });
}

crsym_status crsym_search_json(const crsym_search_params* params, const crsym_formspace* seed, char** json,
                               uint32_t* best_dim) {
  return guarded([&] {
    require(params && json, "null argument");
    crsym::SearchSpec spec;
    spec.q = small_q(params->q);
    spec.n = params->n;
    spec.r = params->r;
    spec.mode = crsym::parse_search_mode(params->mode ? params->mode : "plain");
    if (params->budget) spec.budget = params->budget;
    spec.exhaustive = params->exhaustive != 0;
    spec.jobs = params->jobs == 0 ? 1 : params->jobs;
    spec.rng_seed = params->rng_seed;
    if (seed) spec.seed = seed->m;
    const crsym::SearchOutcome o = crsym::max_constant_rank_dim(spec);
    *json = dup(crsym::search_outcome_json(spec, o));
    if (best_dim) *best_dim = static_cast<uint32_t>(o.best_dim);
  });
}

}  // extern "C"
