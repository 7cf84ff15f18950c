#include "superkit/superkit.h"

#include <cstring>
#include <string>

#include "superkit/dsl.hpp"
#include "superkit/expr.hpp"
#include "superkit/suites.hpp"

struct sk_context {
  superkit::Context ctx;
};

struct sk_expr {
  superkit::SuperExpr e;
};

struct sk_report {
  superkit::Report r;
};

namespace {

thread_local std::string g_last_error;

sk_status set_error(const std::string& msg) {
  g_last_error = msg;
  return SK_ERROR;
}

template <class Fn>
sk_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const superkit::Error& e) {
    return set_error(std::string(superkit::to_string(e.code())) + ": " +
                     e.what());
  } catch (const std::exception& e) {
    return set_error(e.what());
  }
}

sk_status write_buffer(const std::string& s, char* buf, size_t cap,
                       size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf || cap < s.size() + 1) return SK_BUFFER_TOO_SMALL;
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return SK_OK;
}

}  // namespace

extern "C" {

const char* sk_version(void) { return "superkit 1.0.0"; }

const char* sk_last_error(void) { return g_last_error.c_str(); }

sk_status sk_context_new(sk_context** out) {
  if (!out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sk_context{};
    return SK_OK;
  });
}

void sk_context_free(sk_context* ctx) { delete ctx; }

sk_status sk_declare(sk_context* ctx, const char* name, sk_parity parity,
                     sk_symbol_kind kind, const char* const* args,
                     size_t n_args) {
  if (!ctx || !name) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<superkit::SymbolId> arg_ids;
    for (size_t i = 0; i < n_args; ++i)
      arg_ids.push_back(ctx->ctx.require(args[i]));
    superkit::SymbolKind k = kind == SK_COORDINATE
                                 ? superkit::SymbolKind::Coordinate
                             : kind == SK_PARAMETER
                                 ? superkit::SymbolKind::Parameter
                                 : superkit::SymbolKind::Function;
    ctx->ctx.declare(name,
                     parity == SK_ODD ? superkit::Parity::Odd
                                      : superkit::Parity::Even,
                     k, arg_ids);
    return SK_OK;
  });
}

sk_status sk_expr_parse(sk_context* ctx, const char* text, sk_expr** out) {
  if (!ctx || !text || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    auto ast = superkit::dsl::parse_expression(text);
    *out = new sk_expr{superkit::dsl::eval_scalar(ast, ctx->ctx)};
    return SK_OK;
  });
}

void sk_expr_free(sk_expr* e) { delete e; }

sk_status sk_expr_add(const sk_expr* a, const sk_expr* b, sk_expr** out) {
  if (!a || !b || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sk_expr{a->e + b->e};
    return SK_OK;
  });
}

sk_status sk_expr_sub(const sk_expr* a, const sk_expr* b, sk_expr** out) {
  if (!a || !b || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sk_expr{a->e - b->e};
    return SK_OK;
  });
}

sk_status sk_expr_mul(const sk_expr* a, const sk_expr* b, sk_expr** out) {
  if (!a || !b || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sk_expr{a->e * b->e};
    return SK_OK;
  });
}

sk_status sk_expr_partial(const sk_expr* e, const char* symbol,
                          sk_expr** out) {
  if (!e || !symbol || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    superkit::SymbolId id = e->e.context().require(symbol);
    *out = new sk_expr{superkit::partial(e->e, id)};
    return SK_OK;
  });
}

sk_status sk_expr_berezin(const sk_expr* e, const char* const* odd,
                          size_t n_odd, sk_expr** out) {
  if (!e || (!odd && n_odd) || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    std::vector<superkit::SymbolId> ids;
    for (size_t i = 0; i < n_odd; ++i)
      ids.push_back(e->e.context().require(odd[i]));
    *out = new sk_expr{superkit::berezin(e->e, ids)};
    return SK_OK;
  });
}

sk_status sk_expr_invert_even(const sk_expr* e, sk_expr** out) {
  if (!e || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sk_expr{superkit::invert_even(e->e)};
    return SK_OK;
  });
}

sk_status sk_expr_equal(const sk_expr* a, const sk_expr* b, int* out) {
  if (!a || !b || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    *out = (a->e == b->e) ? 1 : 0;
    return SK_OK;
  });
}

sk_status sk_expr_is_zero(const sk_expr* e, int* out) {
  if (!e || !out) return SK_INVALID_ARGUMENT;
  *out = e->e.is_zero() ? 1 : 0;
  return SK_OK;
}

sk_status sk_expr_to_string(const sk_expr* e, char* buf, size_t cap,
                            size_t* needed) {
  if (!e) return SK_INVALID_ARGUMENT;
  return write_buffer(superkit::to_string(e->e), buf, cap, needed);
}

sk_status sk_suite_list(char* buf, size_t cap, size_t* needed) {
  std::string names;
  for (const auto& n : superkit::suite_names()) {
    names += n;
    names += '\n';
  }
  return write_buffer(names, buf, cap, needed);
}

sk_status sk_suite_run(const char* name, uint64_t seed, int perturb,
                       sk_report** out) {
  if (!name || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    superkit::SuiteOptions opts;
    opts.seed = seed;
    opts.perturb = perturb != 0;
    *out = new sk_report{superkit::run_suite(name, opts)};
    return SK_OK;
  });
}

sk_status sk_model_run_file(const char* path, uint64_t seed, sk_report** out) {
  if (!path || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    superkit::SuiteOptions opts;
    opts.seed = seed;
    *out = new sk_report{superkit::run_model_file(path, opts)};
    return SK_OK;
  });
}

sk_status sk_model_run_text(const char* text, const char* name, uint64_t seed,
                            sk_report** out) {
  if (!text || !name || !out) return SK_INVALID_ARGUMENT;
  return guarded([&] {
    superkit::SuiteOptions opts;
    opts.seed = seed;
    *out = new sk_report{superkit::run_model_text(text, name, opts)};
    return SK_OK;
  });
}

void sk_report_free(sk_report* r) { delete r; }

sk_status sk_report_counts(const sk_report* r, int* passed, int* failed) {
  if (!r) return SK_INVALID_ARGUMENT;
  if (passed) *passed = r->r.passed();
  if (failed) *failed = r->r.failed();
  return SK_OK;
}

sk_status sk_report_render(const sk_report* r, const char* format,
                           int with_timings, char* buf, size_t cap,
                           size_t* needed) {
  if (!r || !format) return SK_INVALID_ARGUMENT;
  std::string f = format;
  if (f != "text" && f != "json") {
    g_last_error = "unknown report format '" + f + "'";
    return SK_INVALID_ARGUMENT;
  }
  std::string s = f == "json" ? superkit::render_json(r->r, with_timings != 0)
                              : superkit::render_text(r->r);
  return write_buffer(s, buf, cap, needed);
}

}  // extern "C"
