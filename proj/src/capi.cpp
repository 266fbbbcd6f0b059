#include "ipf/ipf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "ipf/constants.hpp"
#include "ipf/construct.hpp"
#include "ipf/error.hpp"
#include "ipf/report.hpp"
#include "ipf/structure.hpp"
#include "ipf/verify.hpp"

struct ipf_semigroup {
  ipf::FiniteSemigroup value;
};

struct ipf_sequence {
  ipf::Seq value;
};

namespace {

thread_local std::string last_error;

ipf_status to_status(ipf::ErrorCode code) {
  using ipf::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return IPF_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return IPF_ERR_PARSE;
    case ErrorCode::Io: return IPF_ERR_IO;
    case ErrorCode::NotClosed: return IPF_ERR_NOT_CLOSED;
    case ErrorCode::NotAssociative: return IPF_ERR_NOT_ASSOCIATIVE;
    case ErrorCode::EmptyGeneratorSet: return IPF_ERR_EMPTY_GENERATOR_SET;
    case ErrorCode::InvalidParameters: return IPF_ERR_INVALID_PARAMETERS;
    case ErrorCode::EmptySequence: return IPF_ERR_EMPTY_SEQUENCE;
    case ErrorCode::SequenceTooLong: return IPF_ERR_SEQUENCE_TOO_LONG;
    case ErrorCode::NotCommutative: return IPF_ERR_NOT_COMMUTATIVE;
    case ErrorCode::NotArchimedean: return IPF_ERR_NOT_ARCHIMEDEAN;
    case ErrorCode::NotInNilPart: return IPF_ERR_NOT_IN_NIL_PART;
    case ErrorCode::WrongLength: return IPF_ERR_WRONG_LENGTH;
    case ErrorCode::NotAssociativeAfterGlue: return IPF_ERR_NOT_ASSOCIATIVE_AFTER_GLUE;
    case ErrorCode::OrderTooLarge: return IPF_ERR_ORDER_TOO_LARGE;
    case ErrorCode::Internal: return IPF_ERR_INTERNAL;
  }
  return IPF_ERR_INTERNAL;
}

ipf_status fail(ipf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class Fn>
ipf_status guarded(Fn&& fn) {
  try {
    fn();
    return IPF_OK;
  } catch (const ipf::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IPF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IPF_ERR_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw ipf::Error(ipf::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

ipf::ProductOptions product_options(const ipf_options* opts) {
  ipf::ProductOptions out;
  if (opts && opts->dp_cap) out.dp_cap = opts->dp_cap;
  return out;
}

ipf::SearchOptions search_options(const ipf_options* opts) {
  ipf::SearchOptions out;
  if (opts) {
    out.workers = opts->workers ? opts->workers : 1;
    if (opts->dp_cap) out.dp_cap = opts->dp_cap;
  }
  return out;
}

int int_param(const char* const* params, int nparams, int i, const std::string& family) {
  if (i >= nparams || !params[i])
    throw ipf::Error(ipf::ErrorCode::InvalidParameters, family + ": missing parameter " +
                                                            std::to_string(i + 1));
  char* end = nullptr;
  const long v = std::strtol(params[i], &end, 10);
  if (*params[i] == '\0' || *end != '\0' || v < -1000000 || v > 1000000)
    throw ipf::Error(ipf::ErrorCode::InvalidParameters,
                     family + ": bad integer '" + params[i] + "'");
  return static_cast<int>(v);
}

}  // namespace

extern "C" {

const char* ipf_version(void) { return "0.1.0"; }

const char* ipf_status_name(ipf_status status) {
  switch (status) {
    case IPF_OK: return "OK";
    case IPF_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case IPF_ERR_PARSE: return "ParseError";
    case IPF_ERR_IO: return "IoError";
    case IPF_ERR_NOT_CLOSED: return "NotClosed";
    case IPF_ERR_NOT_ASSOCIATIVE: return "NotAssociative";
    case IPF_ERR_EMPTY_GENERATOR_SET: return "EmptyGeneratorSet";
    case IPF_ERR_INVALID_PARAMETERS: return "InvalidParameters";
    case IPF_ERR_EMPTY_SEQUENCE: return "EmptySequence";
    case IPF_ERR_SEQUENCE_TOO_LONG: return "SequenceTooLong";
    case IPF_ERR_NOT_COMMUTATIVE: return "NotCommutative";
    case IPF_ERR_NOT_ARCHIMEDEAN: return "NotArchimedean";
    case IPF_ERR_NOT_IN_NIL_PART: return "NotInNilPart";
    case IPF_ERR_WRONG_LENGTH: return "WrongLength";
    case IPF_ERR_NOT_ASSOCIATIVE_AFTER_GLUE: return "NotAssociativeAfterGlue";
    case IPF_ERR_ORDER_TOO_LARGE: return "OrderTooLarge";
    case IPF_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* ipf_last_error(void) { return last_error.c_str(); }

void ipf_string_free(char* s) { std::free(s); }

void ipf_options_init(ipf_options* opts) {
  if (!opts) return;
  opts->workers = 1;
  opts->dp_cap = 24;
}

ipf_status ipf_semigroup_create(int order, const int* cells, ipf_semigroup** out) {
  return guarded([&] {
    require(out, "out");
    require(cells, "cells");
    if (order < 1) throw ipf::Error(ipf::ErrorCode::InvalidArgument, "order must be positive");
    const auto n = static_cast<std::size_t>(order);
    *out = new ipf_semigroup{
        ipf::FiniteSemigroup::validate(order, std::span<const int>(cells, n * n))};
  });
}

ipf_status ipf_semigroup_parse(const char* text, ipf_semigroup** out) {
  return guarded([&] {
    require(out, "out");
    require(text, "text");
    *out = new ipf_semigroup{ipf::parse_table(text)};
  });
}

ipf_status ipf_semigroup_load(const char* path, ipf_semigroup** out) {
  return guarded([&] {
    require(out, "out");
    require(path, "path");
    *out = new ipf_semigroup{ipf::load_table(path)};
  });
}

void ipf_semigroup_destroy(ipf_semigroup* s) { delete s; }

int ipf_semigroup_order(const ipf_semigroup* s) { return s ? s->value.order() : 0; }

int ipf_semigroup_mul(const ipf_semigroup* s, int a, int b) {
  if (!s || !s->value.contains(a) || !s->value.contains(b)) return -1;
  return s->value.mul(a, b);
}

int ipf_semigroup_is_commutative(const ipf_semigroup* s) {
  return s && s->value.commutative() ? 1 : 0;
}

ipf_status ipf_semigroup_format(const ipf_semigroup* s, char** out) {
  return guarded([&] {
    require(s, "semigroup");
    require(out, "out");
    *out = duplicate(ipf::format_table(s->value));
  });
}

ipf_status ipf_semigroup_describe(const ipf_semigroup* s, char** json_out) {
  return guarded([&] {
    require(s, "semigroup");
    require(json_out, "json_out");
    *json_out = duplicate(ipf::describe(s->value).dump());
  });
}

ipf_status ipf_generate(const char* family, const char* const* params, int nparams,
                        ipf_semigroup** s_out, ipf_sequence** t_out) {
  return guarded([&] {
    require(family, "family");
    require(s_out, "s_out");
    if (nparams > 0) require(params, "params");
    const std::string f = family;
    auto arg = [&](int i) { return int_param(params, nparams, i, f); };
    auto arity = [&](int n) {
      if (nparams != n)
        throw ipf::Error(ipf::ErrorCode::InvalidParameters,
                         f + " takes " + std::to_string(n) + " parameter(s)");
    };
    if (f == "extremal") {
      std::vector<std::string> tokens;
      bool identity = false;
      for (int i = 0; i < nparams; ++i) {
        require(params[i], "param");
        const std::string tok = params[i];
        if (tok == "+identity")
          identity = true;
        else
          tokens.push_back(tok);
      }
      auto pair = ipf::extremal_pair(ipf::parse_extremal_spec(tokens, identity));
      auto* s = new ipf_semigroup{std::move(pair.semigroup)};
      if (t_out) *t_out = new ipf_sequence{std::move(pair.sequence)};
      *s_out = s;
      return;
    }
    if (t_out) *t_out = nullptr;
    if (f == "cyclic-group") {
      arity(1);
      *s_out = new ipf_semigroup{ipf::cyclic_group(arg(0))};
    } else if (f == "cyclic-nil") {
      arity(1);
      *s_out = new ipf_semigroup{ipf::cyclic_nil(arg(0))};
    } else if (f == "monogenic") {
      arity(2);
      *s_out = new ipf_semigroup{ipf::monogenic(arg(0), arg(1))};
    } else if (f == "ideal-extension") {
      arity(2);
      *s_out = new ipf_semigroup{ipf::ideal_extension_trivial(arg(0), arg(1))};
    } else if (f == "group-over-nil") {
      arity(2);
      *s_out = new ipf_semigroup{ipf::group_over_nil(arg(0), arg(1))};
    } else if (f == "left-zero") {
      arity(1);
      *s_out = new ipf_semigroup{ipf::left_zero(arg(0))};
    } else {
      throw ipf::Error(ipf::ErrorCode::InvalidParameters, "unknown family '" + f + "'");
    }
  });
}

ipf_status ipf_sequence_create(const int* terms, size_t length, ipf_sequence** out) {
  return guarded([&] {
    require(out, "out");
    if (length) require(terms, "terms");
    std::vector<ipf::Element> v(terms, terms + length);
    for (int x : v)
      if (x < 0) throw ipf::Error(ipf::ErrorCode::InvalidArgument, "negative term");
    *out = new ipf_sequence{ipf::Seq(std::move(v))};
  });
}

ipf_status ipf_sequence_parse(const char* text, ipf_sequence** out) {
  return guarded([&] {
    require(out, "out");
    require(text, "text");
    *out = new ipf_sequence{ipf::parse_sequence(text)};
  });
}

ipf_status ipf_sequence_load(const char* path, ipf_sequence** out) {
  return guarded([&] {
    require(out, "out");
    require(path, "path");
    *out = new ipf_sequence{ipf::load_sequence(path)};
  });
}

void ipf_sequence_destroy(ipf_sequence* t) { delete t; }

size_t ipf_sequence_length(const ipf_sequence* t) { return t ? t->value.size() : 0; }

int ipf_sequence_term(const ipf_sequence* t, size_t i) {
  if (!t || i >= t->value.size()) return -1;
  return t->value[i];
}

ipf_status ipf_sequence_format(const ipf_sequence* t, char** out) {
  return guarded([&] {
    require(t, "sequence");
    require(out, "out");
    *out = duplicate(ipf::format_sequence(t->value));
  });
}

ipf_status ipf_products(const ipf_semigroup* s, const ipf_sequence* t, const ipf_options* opts,
                        char** json_out) {
  return guarded([&] {
    require(s, "semigroup");
    require(t, "sequence");
    require(json_out, "json_out");
    const auto sets = ipf::product_sets(s->value, t->value, product_options(opts));
    ipf::Json out;
    out["length"] = t->value.size();
    out["pi"] = t->value.empty() ? ipf::Json(nullptr) : ipf::Json(ipf::pi(s->value, t->value));
    out["anyOrder"] = ipf::to_json(sets.any_order);
    out["naturalOrder"] = ipf::to_json(sets.natural_order);
    *json_out = duplicate(out.dump());
  });
}

ipf_status ipf_free_check(const ipf_semigroup* s, const ipf_sequence* t, int strong,
                          const ipf_options* opts, int* is_free) {
  return guarded([&] {
    require(s, "semigroup");
    require(t, "sequence");
    require(is_free, "is_free");
    *is_free = strong ? ipf::is_strongly_free(s->value, t->value)
                      : ipf::is_weakly_free(s->value, t->value, product_options(opts));
  });
}

ipf_status ipf_lambda(const ipf_semigroup* s, const ipf_sequence* t, int x,
                      const ipf_options* opts, size_t* value) {
  return guarded([&] {
    require(s, "semigroup");
    require(t, "sequence");
    require(value, "value");
    if (!s->value.contains(x)) throw ipf::Error(ipf::ErrorCode::InvalidArgument, "x out of range");
    *value = ipf::lambda(s->value, t->value, x, product_options(opts));
  });
}

ipf_status ipf_constants(const ipf_semigroup* s, unsigned which, const ipf_options* opts,
                         char** json_out) {
  return guarded([&] {
    require(s, "semigroup");
    require(json_out, "json_out");
    const auto search = search_options(opts);
    ipf::Json out = ipf::Json::array();
    if (which & IPF_CONST_I) out.push_back(ipf::to_json(ipf::erdos_burgess(s->value, search)));
    if (which & IPF_CONST_SI)
      out.push_back(ipf::to_json(ipf::strong_erdos_burgess(s->value, search)));
    if (which & IPF_CONST_D) {
      if (s->value.commutative())
        out.push_back(ipf::to_json(ipf::davenport(s->value, search)));
      else
        out.push_back({{"kind", "Davenport"}, {"skipped", "semigroup is not commutative"}});
    }
    *json_out = duplicate(out.dump());
  });
}

ipf_status ipf_check_extremal(const ipf_semigroup* s, const ipf_sequence* t,
                              const ipf_options* opts, char** json_out, int* equivalent) {
  return guarded([&] {
    require(s, "semigroup");
    require(t, "sequence");
    require(json_out, "json_out");
    const auto cert = ipf::extremal_structure_check(s->value, t->value);
    const bool free = ipf::is_weakly_free(s->value, t->value, product_options(opts));
    ipf::Json out;
    out["weaklyFree"] = free;
    out["certificate"] = ipf::to_json(cert);
    out["equivalent"] = free == cert.pass;
    if (equivalent) *equivalent = free == cert.pass;
    *json_out = duplicate(out.dump());
  });
}

ipf_status ipf_enumerate(int order, int commutative_only, int dedup_iso, const int* resume_prefix,
                         size_t prefix_length, int allow_order5, unsigned workers,
                         ipf_table_callback callback, void* user) {
  return guarded([&] {
    require(reinterpret_cast<const void*>(callback), "callback");
    ipf::EnumerateOptions eo;
    eo.order = order;
    eo.commutative_only = commutative_only != 0;
    eo.dedup_iso = dedup_iso != 0;
    if (prefix_length) {
      require(resume_prefix, "resume_prefix");
      eo.resume_from.assign(resume_prefix, resume_prefix + prefix_length);
    }
    eo.allow_order5 = allow_order5 != 0;
    eo.workers = workers ? workers : 1;
    for (const auto& s : ipf::enumerate_semigroups(eo))
      if (!callback(s.order(), s.cells().data(), user)) break;
  });
}

void ipf_verify_options_init(ipf_verify_options* opts) {
  if (!opts) return;
  opts->min_order = 1;
  opts->max_order = 4;
  opts->commutative_only = 0;
  opts->checks = nullptr;
  opts->workers = 1;
  opts->dp_cap = 24;
  opts->allow_order5 = 0;
  opts->include_timing = 0;
}

ipf_status ipf_verify(const ipf_verify_options* opts, char** json_out, int* all_passed) {
  return guarded([&] {
    require(opts, "opts");
    require(json_out, "json_out");
    ipf::VerifyOptions vo;
    vo.min_order = opts->min_order;
    vo.max_order = opts->max_order;
    vo.commutative_only = opts->commutative_only != 0;
    vo.workers = opts->workers ? opts->workers : 1;
    if (opts->dp_cap) vo.dp_cap = opts->dp_cap;
    vo.allow_order5 = opts->allow_order5 != 0;
    if (opts->checks && *opts->checks) {
      std::string list = opts->checks;
      std::size_t pos = 0;
      while (pos <= list.size()) {
        const std::size_t comma = std::min(list.find(',', pos), list.size());
        if (comma > pos) vo.checks.push_back(list.substr(pos, comma - pos));
        pos = comma + 1;
      }
    }
    const auto run = ipf::run_verification(vo);
    if (all_passed) *all_passed = run.all_passed();
    *json_out = duplicate(ipf::to_json(run, opts->include_timing != 0).dump(2));
  });
}

}  // extern "C"
