#include "tmm/tmm.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>

#include "grammar.hpp"
#include "independence.hpp"
#include "json_io.hpp"
#include "suites.hpp"

struct tmm_expansion {
  tmm::MagnusExpansion e;
};
struct tmm_braid {
  tmm::BraidWord b;
};
struct tmm_cycle {
  tmm::BarChain z;
};

namespace {

thread_local std::string g_error;
thread_local std::int64_t g_error_pos = -1;

template <class F>
tmm_status guarded(F&& f) {
  g_error.clear();
  g_error_pos = -1;
  try {
    f();
    return TMM_OK;
  } catch (const tmm::ParseError& e) {
    g_error = e.what();
    g_error_pos = static_cast<std::int64_t>(e.position());
    return TMM_ERR_PARSE;
  } catch (const tmm::DomainError& e) {
    g_error = e.what();
    return TMM_ERR_DOMAIN;
  } catch (const tmm::CheckFailure& e) {
    g_error = e.what();
    return TMM_ERR_CHECK;
  } catch (const std::bad_alloc&) {
    g_error = "out of memory";
    return TMM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_error = e.what();
    return TMM_ERR_INTERNAL;
  }
}

tmm_status bad_argument(const char* what) {
  g_error = what;
  g_error_pos = -1;
  return TMM_ERR_ARGUMENT;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit(const nlohmann::json& j, char** out) { *out = dup(j.dump(2)); }

}  // namespace

extern "C" {

const char* tmm_version(void) { return "0.1.0"; }
const char* tmm_last_error(void) { return g_error.c_str(); }
int64_t tmm_last_error_position(void) { return g_error_pos; }
void tmm_string_free(char* s) { std::free(s); }
uint64_t tmm_default_seed(void) { return tmm::kDefaultSeed; }

tmm_status tmm_expansion_standard(int n, int degree, tmm_expansion** out) {
  if (!out) return bad_argument("null output pointer");
  return guarded([&] { *out = new tmm_expansion{tmm::MagnusExpansion::standard(n, degree)}; });
}

tmm_status tmm_expansion_from_json(int n, int degree, const char* json, tmm_expansion** out) {
  if (!out || !json) return bad_argument("null argument");
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw tmm::ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    *out = new tmm_expansion{tmm::expansion_from_json(j, n, degree)};
  });
}

void tmm_expansion_free(tmm_expansion* e) { delete e; }

tmm_status tmm_expand(const tmm_expansion* e, const char* word, char** json_out) {
  if (!e || !word || !json_out) return bad_argument("null argument");
  return guarded([&] { emit(tmm::to_json(tmm::expand(e->e, tmm::parse_word(word, e->e.rank()))), json_out); });
}

tmm_status tmm_braid_parse(int n, const char* text, tmm_braid** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new tmm_braid{tmm::parse_braid(text, n)}; });
}

void tmm_braid_free(tmm_braid* b) { delete b; }

tmm_status tmm_braid_string(const tmm_braid* b, char** out) {
  if (!b || !out) return bad_argument("null argument");
  return guarded([&] { *out = dup(b->b.str()); });
}

tmm_status tmm_braid_equal(const tmm_braid* a, const tmm_braid* b, int* equal) {
  if (!a || !b || !equal) return bad_argument("null argument");
  return guarded([&] {
    if (a->b.strands() != b->b.strands()) throw tmm::DomainError("braids have different strand counts");
    *equal = tmm::braids_equal(a->b, b->b) ? 1 : 0;
  });
}

tmm_status tmm_braid_permutation(const tmm_braid* b, char** json_out) {
  if (!b || !json_out) return bad_argument("null argument");
  return guarded([&] {
    emit({{"n", b->b.strands()}, {"perm", tmm::permutation(b->b)}, {"pure", tmm::is_pure(b->b)}}, json_out);
  });
}

tmm_status tmm_braid_xi(const tmm_braid* b, char** json_out) {
  if (!b || !json_out) return bad_argument("null argument");
  return guarded([&] {
    const tmm::AutPair a = tmm::xi(b->b);
    auto imgs = nlohmann::json::array();
    auto invs = nlohmann::json::array();
    for (const auto& w : a.fwd().images()) imgs.push_back(w.str());
    for (const auto& w : a.inv().images()) invs.push_back(w.str());
    emit({{"n", b->b.strands()}, {"braid", b->b.str()}, {"images", imgs}, {"inverse_images", invs}}, json_out);
  });
}

tmm_status tmm_tau1(const tmm_expansion* e, const tmm_braid* b, char** json_out) {
  if (!e || !b || !json_out) return bad_argument("null argument");
  return guarded([&] {
    if (b->b.strands() != e->e.rank()) throw tmm::DomainError("braid and expansion ranks differ");
    emit(tmm::to_json(tmm::tau1(e->e, tmm::GroupElement::from_braid(b->b))), json_out);
  });
}

tmm_status tmm_hbar(const tmm_expansion* e, int p, const char* tuple, tmm_form form, char** json_out) {
  if (!e || !tuple || !json_out) return bad_argument("null argument");
  return guarded([&] {
    const int n = e->e.rank();
    std::vector<tmm::GroupElement> args;
    for (const auto& b : tmm::parse_tuple(tuple, n)) args.push_back(tmm::GroupElement::from_braid(b));
    if (static_cast<int>(args.size()) != p) {
      throw tmm::DomainError("tuple has " + std::to_string(args.size()) + " entries, expected " + std::to_string(p));
    }
    std::optional<tmm::Cochain> u;
    switch (form) {
      case TMM_FORM_TENSOR: u = tmm::hbar_cochain(e->e, p); break;
      case TMM_FORM_EXTERIOR: u = tmm::hbar_exterior(e->e, p); break;
      case TMM_FORM_HOM: u = tmm::hp_cochain(e->e, p); break;
      default: throw tmm::DomainError("unknown form");
    }
    emit(tmm::to_json((*u)(std::span<const tmm::GroupElement>(args))), json_out);
  });
}

tmm_status tmm_cycle_parse(int n, const char* text, tmm_cycle** out) {
  if (!text || !out) return bad_argument("null argument");
  return guarded([&] { *out = new tmm_cycle{tmm::parse_cycle(text, n)}; });
}

void tmm_cycle_free(tmm_cycle* c) { delete c; }

tmm_status tmm_cycle_degree(const tmm_cycle* c, int* degree) {
  if (!c || !degree) return bad_argument("null argument");
  *degree = c->z.degree();
  return TMM_OK;
}

tmm_status tmm_pair(const tmm_expansion* e, const int* parts, size_t nparts, tmm_form form, const tmm_cycle* c,
                    char** json_out) {
  if (!e || !c || !json_out || (nparts > 0 && !parts)) return bad_argument("null argument");
  return guarded([&] {
    const std::vector<int> ps(parts, parts + nparts);
    std::optional<tmm::Cochain> u;
    if (form == TMM_FORM_TENSOR) {
      if (ps.size() != 1) throw tmm::DomainError("tensor form needs a single degree");
      u = tmm::hbar_cochain(e->e, ps.front());
    } else if (form == TMM_FORM_EXTERIOR) {
      u = tmm::hbar_lambda(e->e, ps);
    } else {
      throw tmm::DomainError("pairing supports the tensor and exterior forms");
    }
    if (u->degree() != c->z.degree()) {
      throw tmm::DomainError("class of degree " + std::to_string(u->degree()) + " paired with a cycle of degree " +
                             std::to_string(c->z.degree()));
    }
    const tmm::CoeffValue v = tmm::pair(*u, c->z);
    emit({{"degree", u->degree()}, {"cycle_terms", c->z.terms().size()}, {"value", tmm::to_json(v)},
          {"zero", tmm::is_zero(v)}},
         json_out);
  });
}

tmm_status tmm_certificate(int n, int q, int catalog_depth, char** json_out, int* pass) {
  if (!json_out) return bad_argument("null argument");
  return guarded([&] {
    const tmm::Certificate c = tmm::certificate(n, q, tmm::MagnusExpansion::standard(n, 2), catalog_depth);
    emit(c.to_json(), json_out);
    if (pass) *pass = c.pass() ? 1 : 0;
  });
}

tmm_status tmm_assertion_a(const int* parts, size_t nparts, int n, uint64_t seed, int samples, char** json_out,
                           int* pass) {
  if (!json_out || (nparts > 0 && !parts)) return bad_argument("null argument");
  return guarded([&] {
    const tmm::Partition lambda(std::vector<int>(parts, parts + nparts));
    const auto r = tmm::assertion_a_scalar_check(lambda, n, tmm::MagnusExpansion::standard(n, 2), seed, samples);
    nlohmann::json j{{"lambda", lambda.parts}, {"n", n},          {"r_lambda", r.r.get_str()},
                     {"seed", seed},           {"cycles", r.cycles_checked}, {"identity_holds", r.identity_holds},
                     {"some_nonzero", r.some_nonzero}, {"passed", r.passed()}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    emit(j, json_out);
    if (pass) *pass = r.passed() ? 1 : 0;
  });
}

tmm_status tmm_check_suite(const char* name, uint64_t seed, char** json_out, int* pass) {
  if (!name || !json_out) return bad_argument("null argument");
  return guarded([&] {
    const tmm::SuiteReport r = tmm::check_suite(name, seed);
    emit(r.to_json(), json_out);
    if (pass) *pass = r.passed() ? 1 : 0;
  });
}

}  // extern "C"
