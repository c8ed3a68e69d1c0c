#include "pillar/pillar.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "pillar/braid.hpp"
#include "pillar/checks.hpp"
#include "pillar/mcg.hpp"
#include "pillar/serialize.hpp"

struct pillar_word {
  pillar::Word value;
};

struct pillar_morphism {
  pillar::FreeMorphism value;
};

struct pillar_report {
  pillar::VerificationReport value;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_position = std::numeric_limits<std::size_t>::max();

pillar_status status_of(pillar::ErrorCode code) {
  using pillar::ErrorCode;
  switch (code) {
    case ErrorCode::parse: return PILLAR_ERR_PARSE;
    case ErrorCode::basis_mismatch: return PILLAR_ERR_BASIS_MISMATCH;
    case ErrorCode::index_out_of_range: return PILLAR_ERR_INDEX_RANGE;
    case ErrorCode::budget_exceeded: return PILLAR_ERR_BUDGET;
    case ErrorCode::not_z_stable: return PILLAR_ERR_NOT_Z_STABLE;
    case ErrorCode::invalid_argument: return PILLAR_ERR_INVALID_ARGUMENT;
  }
  return PILLAR_ERR_INTERNAL;
}

pillar_status fail(pillar_status s, const std::string& message,
                   std::size_t position = std::numeric_limits<std::size_t>::max()) {
  last_error = message;
  last_position = position;
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
pillar_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    last_position = std::numeric_limits<std::size_t>::max();
    return PILLAR_OK;
  } catch (const pillar::ParseError& e) {
    return fail(status_of(e.code()), e.what(), e.position());
  } catch (const pillar::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PILLAR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PILLAR_ERR_INTERNAL, e.what());
  }
}

std::size_t budget_or_default(std::size_t budget) {
  return budget == 0 ? pillar::kDefaultLetterBudget : budget;
}

pillar::Basis make_basis(pillar_basis_kind kind, int n) {
  switch (kind) {
    case PILLAR_BASIS_XY: return pillar::Basis::xy(n);
    case PILLAR_BASIS_YZ: return pillar::Basis::yz(n);
    case PILLAR_BASIS_ABSTRACT: return pillar::Basis::abstract(n);
  }
  throw pillar::Error(pillar::ErrorCode::invalid_argument, "unknown basis kind");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define PILLAR_REQUIRE(cond)                                                        \
  do {                                                                              \
    if (!(cond)) return fail(PILLAR_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* pillar_version(void) { return "1.0.0"; }

const char* pillar_last_error(void) { return last_error.c_str(); }

size_t pillar_last_error_position(void) { return last_position; }

void pillar_string_free(char* s) { std::free(s); }

pillar_status pillar_word_parse(pillar_basis_kind kind, int n, const char* text,
                                pillar_word** out) {
  PILLAR_REQUIRE(text && out);
  return guarded([&] { *out = new pillar_word{pillar::parse_word(text, make_basis(kind, n))}; });
}

pillar_status pillar_word_format(const pillar_word* w, char** out) {
  PILLAR_REQUIRE(w && out);
  return guarded([&] { *out = copy_string(pillar::format_word(w->value)); });
}

size_t pillar_word_length(const pillar_word* w) { return w ? w->value.size() : 0; }

pillar_status pillar_word_multiply(const pillar_word* u, const pillar_word* v, pillar_word** out) {
  PILLAR_REQUIRE(u && v && out);
  return guarded([&] { *out = new pillar_word{u->value * v->value}; });
}

pillar_status pillar_word_invert(const pillar_word* w, pillar_word** out) {
  PILLAR_REQUIRE(w && out);
  return guarded([&] { *out = new pillar_word{w->value.inverse()}; });
}

int pillar_word_equal(const pillar_word* u, const pillar_word* v) {
  return u && v && u->value == v->value ? 1 : 0;
}

void pillar_word_free(pillar_word* w) { delete w; }

pillar_status pillar_identity(pillar_basis_kind kind, int n, pillar_morphism** out) {
  PILLAR_REQUIRE(out);
  return guarded(
      [&] { *out = new pillar_morphism{pillar::FreeMorphism::identity(make_basis(kind, n))}; });
}

pillar_status pillar_twist_word_action(int genus, const char* twist_word, size_t budget,
                                       pillar_morphism** out) {
  PILLAR_REQUIRE(twist_word && out);
  return guarded([&] {
    auto tw = pillar::parse_twist_word(twist_word, genus);
    *out = new pillar_morphism{pillar::evaluate_twist_word(tw, budget_or_default(budget))};
  });
}

pillar_status pillar_sigma_action(int index, int genus, pillar_morphism** out) {
  PILLAR_REQUIRE(out);
  return guarded(
      [&] { *out = new pillar_morphism{pillar::pillar_switching_action(index, genus)}; });
}

pillar_status pillar_sigma_yz_action(int index, int genus, pillar_morphism** out) {
  PILLAR_REQUIRE(out);
  return guarded([&] { *out = new pillar_morphism{pillar::pillar_switching_yz(index, genus)}; });
}

pillar_status pillar_braid_psi_action(int genus, const char* braid_word, size_t budget,
                                      pillar_morphism** out) {
  PILLAR_REQUIRE(braid_word && out);
  return guarded([&] {
    auto b = pillar::parse_braid_word(braid_word, genus);
    *out = new pillar_morphism{pillar::psi_action(b, genus, budget_or_default(budget))};
  });
}

pillar_status pillar_braid_artin_action(int strands, const char* braid_word, size_t budget,
                                        pillar_morphism** out) {
  PILLAR_REQUIRE(braid_word && out);
  return guarded([&] {
    auto b = pillar::parse_braid_word(braid_word, strands);
    *out = new pillar_morphism{pillar::artin_action(b, budget_or_default(budget))};
  });
}

pillar_status pillar_morphism_apply(const pillar_morphism* f, const pillar_word* w, size_t budget,
                                    pillar_word** out) {
  PILLAR_REQUIRE(f && w && out);
  return guarded([&] {
    *out = new pillar_word{pillar::apply(f->value, w->value, budget_or_default(budget))};
  });
}

pillar_status pillar_morphism_compose(const pillar_morphism* f, const pillar_morphism* h,
                                      size_t budget, pillar_morphism** out) {
  PILLAR_REQUIRE(f && h && out);
  return guarded([&] {
    *out = new pillar_morphism{pillar::compose(f->value, h->value, budget_or_default(budget))};
  });
}

pillar_status pillar_morphism_equal(const pillar_morphism* f, const pillar_morphism* h, int* out) {
  PILLAR_REQUIRE(f && h && out);
  return guarded([&] { *out = pillar::endo_equals(f->value, h->value) ? 1 : 0; });
}

pillar_status pillar_morphism_fixes_relator(const pillar_morphism* f, int* out) {
  PILLAR_REQUIRE(f && out);
  return guarded([&] { *out = pillar::fixes_relator(f->value) ? 1 : 0; });
}

pillar_status pillar_morphism_to_json(const pillar_morphism* f, char** out) {
  PILLAR_REQUIRE(f && out);
  return guarded([&] { *out = copy_string(pillar::morphism_to_json(f->value)); });
}

pillar_status pillar_morphism_from_json(const char* json, pillar_morphism** out) {
  PILLAR_REQUIRE(json && out);
  return guarded([&] { *out = new pillar_morphism{pillar::morphism_from_json(json)}; });
}

void pillar_morphism_free(pillar_morphism* f) { delete f; }

pillar_status pillar_braid_is_trivial(int strands, const char* braid_word, size_t budget,
                                      int* out) {
  PILLAR_REQUIRE(braid_word && out);
  return guarded([&] {
    auto b = pillar::parse_braid_word(braid_word, strands);
    *out = pillar::is_trivial_braid(b, budget_or_default(budget)) ? 1 : 0;
  });
}

pillar_status pillar_verify(int genus, unsigned checks, uint64_t seed, size_t budget,
                            pillar_report** out) {
  PILLAR_REQUIRE(out);
  if ((checks & ~static_cast<unsigned>(PILLAR_CHECK_ALL)) != 0 || checks == 0)
    return fail(PILLAR_ERR_INVALID_ARGUMENT, "unknown or empty check selection");
  constexpr unsigned needs_two = PILLAR_CHECK_FACTORIZATION | PILLAR_CHECK_CHAINS |
                                 PILLAR_CHECK_RELATIONS | PILLAR_CHECK_ARTIN_RESTRICTION;
  if (genus < 1) return fail(PILLAR_ERR_INVALID_ARGUMENT, "genus must be at least 1");
  if (genus < 2 && (checks & needs_two) != 0)
    return fail(PILLAR_ERR_INVALID_ARGUMENT,
                "the selected checks involve pillar switchings and need genus at least 2");

  return guarded([&] {
    const std::size_t b = budget_or_default(budget);
    pillar::VerificationReport report{genus, {}};
    auto add = [&](const char* prefix, pillar::VerificationReport part) {
      for (auto& c : part.cases) c.name = std::string(prefix) + ": " + c.name;
      pillar::merge_into(report, std::move(part));
    };
    if (checks & PILLAR_CHECK_FACTORIZATION)
      add("factorization", pillar::verify_twist_factorizations(genus, b));
    if (checks & PILLAR_CHECK_CHAINS) add("chains", pillar::replay_proof_chains(genus));
    if (checks & PILLAR_CHECK_RELATIONS) add("relations", pillar::verify_psi_relations(genus, b));
    if (checks & PILLAR_CHECK_RELATOR) add("relator", pillar::relator_invariance_report(genus));
    if (checks & PILLAR_CHECK_ARTIN_RESTRICTION)
      add("artin-restriction", pillar::artin_restriction_report(genus));
    if (checks & PILLAR_CHECK_YZ_ROUNDTRIP)
      add("yz-roundtrip", pillar::yz_roundtrip_report(genus, seed));
    if (checks & PILLAR_CHECK_INVERSES)
      add("inverses", pillar::inverse_certification_report(genus));
    *out = new pillar_report{std::move(report)};
  });
}

int pillar_report_holds(const pillar_report* r) { return r && r->value.holds() ? 1 : 0; }

size_t pillar_report_case_count(const pillar_report* r) { return r ? r->value.cases.size() : 0; }

pillar_status pillar_report_to_json(const pillar_report* r, char** out) {
  PILLAR_REQUIRE(r && out);
  return guarded([&] { *out = copy_string(pillar::report_to_json(r->value)); });
}

pillar_status pillar_report_to_text(const pillar_report* r, char** out) {
  PILLAR_REQUIRE(r && out);
  return guarded([&] { *out = copy_string(pillar::report_to_text(r->value)); });
}

void pillar_report_free(pillar_report* r) { delete r; }

}  // extern "C"
