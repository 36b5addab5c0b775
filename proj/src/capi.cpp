#include "ladder/ladder.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "ladder/errors.hpp"
#include "ladder/json_io.hpp"
#include "ladder/render.hpp"

struct lad_datum {
  ladder::LadderDatum value;
};

namespace {

struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

thread_local std::string g_error;
thread_local std::string g_clause;

lad_status fail(lad_status s, const std::string& msg, const std::string& clause = "") {
  g_error = msg;
  g_clause = clause;
  return s;
}

template <typename F>
lad_status guarded(F&& f) {
  g_error.clear();
  g_clause.clear();
  try {
    f();
    return LAD_OK;
  } catch (const ArgError& e) {
    return fail(LAD_E_ARG, e.what());
  } catch (const ladder::DomainError& e) {
    return fail(LAD_E_DOMAIN, e.what(), e.clause());
  } catch (const ladder::ParseError& e) {
    return fail(LAD_E_PARSE, e.what());
  } catch (const ladder::InternalError& e) {
    return fail(LAD_E_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(LAD_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string dump(const ladder::Json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void bad_format() { throw ArgError("format not supported by this operation"); }

}  // namespace

extern "C" {

const char* lad_last_error(void) { return g_error.c_str(); }
const char* lad_last_error_clause(void) { return g_clause.c_str(); }

void lad_string_free(char* s) { std::free(s); }

lad_status lad_datum_from_json(const char* json, lad_datum** out) {
  if (!json || !out) return fail(LAD_E_ARG, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new lad_datum{ladder::datum_from_json(ladder::parse_json(json))}; });
}

void lad_datum_free(lad_datum* d) { delete d; }

lad_status lad_datum_clone(const lad_datum* d, lad_datum** out) {
  if (!d || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] { *out = new lad_datum{d->value}; });
}

lad_status lad_datum_to_json(const lad_datum* d, char** out) {
  if (!d || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] { *out = dup(dump(ladder::to_json(d->value))); });
}

lad_status lad_datum_render(const lad_datum* d, lad_format fmt, char** out) {
  if (!d || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] {
    if (fmt != LAD_FMT_TEXT) bad_format();
    *out = dup(ladder::render(d->value) + "\n");
  });
}

int lad_datum_equal(const lad_datum* a, const lad_datum* b) { return a && b && a->value == b->value; }

int lad_datum_block_count(const lad_datum* d) { return d ? static_cast<int>(d->value.blocks.size()) : 0; }

const char* lad_datum_block_id(const lad_datum* d, int i) {
  if (!d || i < 0 || i >= static_cast<int>(d->value.blocks.size())) return nullptr;
  return d->value.blocks[static_cast<std::size_t>(i)].rho.id.c_str();
}

lad_status lad_validate(const lad_datum* d, int64_t* rank) {
  if (!d) return fail(LAD_E_ARG, "null argument");
  return guarded([&] {
    const auto n = ladder::validate_datum(d->value);
    if (rank) *rank = n;
  });
}

lad_status lad_graph_render(const lad_datum* d, const char* rho_id, lad_format fmt, char** out) {
  if (!d || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] {
    ladder::validate_datum(d->value);
    std::vector<const ladder::LadderBlock*> blocks;
    for (const auto& b : d->value.blocks) {
      if (!rho_id || b.rho.id == rho_id) blocks.push_back(&b);
    }
    if (rho_id && blocks.empty()) {
      throw ladder::DomainError("unknown-label", std::string("no block with label '") + rho_id + "'");
    }
    std::string text;
    ladder::Json arr = ladder::Json::array();
    for (const auto* b : blocks) {
      const auto g = ladder::build_graph(*b);
      switch (fmt) {
        case LAD_FMT_JSON: arr.push_back(ladder::to_json(g)); break;
        case LAD_FMT_ASCII: text += "label " + b->rho.id + "\n" + ladder::render_ascii(g); break;
        case LAD_FMT_DOT: text += ladder::render_dot(g); break;
        default: bad_format();
      }
    }
    *out = dup(fmt == LAD_FMT_JSON ? dump(ladder::Json{{"graphs", arr}}) : text);
  });
}

lad_status lad_derivative(const lad_datum* d, const char* rho_id, const char* x, lad_datum** out) {
  if (!d || !rho_id || !x || !out) return fail(LAD_E_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    ladder::validate_datum(d->value);
    auto r = ladder::derivative(d->value, rho_id, ladder::HalfInt::parse(x));
    if (r) *out = new lad_datum{std::move(*r)};
  });
}

lad_status lad_is_supercuspidal(const lad_datum* d, int* out) {
  if (!d || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] {
    ladder::validate_datum(d->value);
    *out = ladder::is_supercuspidal(d->value) ? 1 : 0;
  });
}

lad_status lad_support(const lad_datum* d, lad_format fmt, char** out) {
  if (!d || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] {
    ladder::validate_datum(d->value);
    const auto s = ladder::supp_ladder(d->value);
    if (fmt == LAD_FMT_JSON) {
      *out = dup(dump(ladder::to_json(s)));
    } else if (fmt == LAD_FMT_TEXT) {
      *out = dup(ladder::render(s));
    } else {
      bad_format();
    }
  });
}

lad_status lad_standard_module(const lad_datum* d, lad_format fmt, char** out) {
  if (!d || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] {
    const auto rank = ladder::validate_datum(d->value);
    const auto m = ladder::standard_module_of(d->value);
    if (fmt == LAD_FMT_JSON) {
      auto j = ladder::to_json(m);
      j["rank"] = rank;
      j["text"] = ladder::render_langlands(m);
      *out = dup(dump(j));
    } else if (fmt == LAD_FMT_TEXT) {
      *out = dup(ladder::render_langlands(m) + "\n");
    } else {
      bad_format();
    }
  });
}

lad_status lad_jacquet(const lad_datum* d, const char* rho_id, int raw, lad_format fmt, char** out) {
  if (!d || !rho_id || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] {
    ladder::validate_datum(d->value);
    const auto terms = ladder::jacquet_expansion(d->value, rho_id, raw != 0);
    if (fmt == LAD_FMT_JSON) {
      *out = dup(dump(ladder::jacquet_to_json(terms)));
    } else if (fmt == LAD_FMT_TEXT) {
      *out = dup(ladder::render(terms));
    } else {
      bad_format();
    }
  });
}

lad_status lad_aubert(const lad_datum* d, lad_datum** out) {
  if (!d || !out) return fail(LAD_E_ARG, "null argument");
  *out = nullptr;
  return guarded([&] {
    ladder::validate_datum(d->value);
    *out = new lad_datum{ladder::aubert_dual(d->value)};
  });
}

lad_status lad_det_formula(const lad_datum* d, int projected, lad_format fmt, char** out) {
  if (!d || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] {
    ladder::validate_datum(d->value);
    switch (fmt) {
      case LAD_FMT_TABLE: *out = dup(ladder::render_sigma_table(d->value)); return;
      case LAD_FMT_JSON:
        *out = dup(dump(
            ladder::to_json(ladder::determinantal_formula(d->value, projected != 0), ladder::labels_of(d->value))));
        return;
      case LAD_FMT_TEXT: *out = dup(ladder::render(ladder::determinantal_formula(d->value, projected != 0))); return;
      default: bad_format();
    }
  });
}

lad_status lad_gl_det_formula(const char* json, lad_format fmt, char** out) {
  if (!json || !out) return fail(LAD_E_ARG, "null argument");
  return guarded([&] {
    const auto f = ladder::gl_determinantal_formula(ladder::gl_ladder_from_json(ladder::parse_json(json)));
    if (fmt == LAD_FMT_JSON) {
      *out = dup(dump(ladder::to_json(f)));
    } else if (fmt == LAD_FMT_TEXT) {
      *out = dup(ladder::render(f));
    } else {
      bad_format();
    }
  });
}

}  // extern "C"
