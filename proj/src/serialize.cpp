#include "pillar/serialize.hpp"

#include <sstream>

#include "json.hpp"

namespace pillar {

using nlohmann::json;

namespace {

const char* kind_name(Basis::Kind k) {
  switch (k) {
    case Basis::Kind::xy: return "xy";
    case Basis::Kind::yz: return "yz";
    case Basis::Kind::abstract: return "abstract";
  }
  return "?";
}

Basis basis_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const int n = j.at("genus_or_rank").get<int>();
  if (kind == "xy") return Basis::xy(n);
  if (kind == "yz") return Basis::yz(n);
  if (kind == "abstract") return Basis::abstract(n);
  throw Error(ErrorCode::parse, "unknown basis kind \"" + kind + "\"");
}

json mismatch_json(const Mismatch& m) {
  return json{{"generator", m.generator}, {"lhs", format_word(m.lhs)}, {"rhs", format_word(m.rhs)}};
}

}  // namespace

std::string morphism_to_json(const FreeMorphism& f, int indent) {
  if (!f.is_endomorphism())
    throw Error(ErrorCode::basis_mismatch, "only endomorphisms can be exported");
  json images = json::object();
  for (Symbol s : f.domain().generators()) images[symbol_name(s)] = format_word(f.image(s));
  json out{{"basis",
            {{"kind", kind_name(f.domain().kind())}, {"genus_or_rank", f.domain().parameter()}}},
           {"images", std::move(images)}};
  return out.dump(indent);
}

FreeMorphism morphism_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
  try {
    Basis basis = basis_from(j.at("basis"));
    const json& images = j.at("images");
    if (images.size() != static_cast<std::size_t>(basis.rank()))
      throw Error(ErrorCode::parse, "expected " + std::to_string(basis.rank()) + " images");
    std::vector<Word> words;
    for (Symbol s : basis.generators()) {
      auto it = images.find(symbol_name(s));
      if (it == images.end()) throw Error(ErrorCode::parse, "missing image of " + symbol_name(s));
      words.push_back(parse_word(it->get<std::string>(), basis));
    }
    return FreeMorphism(basis, basis, std::move(words));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, e.what());
  }
}

std::string report_to_json(const VerificationReport& r, int indent) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    json mismatches = json::array();
    for (const auto& m : c.mismatches) mismatches.push_back(mismatch_json(m));
    cases.push_back(json{{"name", c.name}, {"holds", c.holds()}, {"mismatches", std::move(mismatches)}});
  }
  return json{{"genus", r.genus}, {"cases", std::move(cases)}}.dump(indent);
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.cases) {
    out << (c.holds() ? "  ok    " : "  FAIL  ") << c.name << '\n';
    for (const auto& m : c.mismatches) {
      out << "        " << m.generator << ":\n"
          << "          lhs: " << format_word(m.lhs) << '\n'
          << "          rhs: " << format_word(m.rhs) << '\n';
    }
  }
  return out.str();
}

}  // namespace pillar
