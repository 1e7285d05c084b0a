#include "lcsgc/io.hpp"

#include <string>
#include <vector>

namespace lcsgc {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::BadInput, message); }

Bound read_bound(const json& value, const std::string& where) {
  if (!value.is_number_integer()) bad(where + ": expected an integer");
  return value.get<Bound>();
}

GapConstraint read_constraint(const json& pair, const std::string& where) {
  if (!pair.is_array() || pair.size() != 2) bad(where + ": expected [lower, upper]");
  return GapConstraint(read_bound(pair[0], where), read_bound(pair[1], where));
}

Word read_int_word(const json& value, const char* key) {
  std::vector<Letter> symbols;
  for (const auto& x : value) {
    if (!x.is_number_integer()) bad(std::string("'") + key + "' must hold integers");
    symbols.push_back(x.get<Letter>());
  }
  return Word(std::move(symbols));
}

Letter letter_for_key(const ProblemInstance& inst, const std::string& key) {
  if (!inst.alphabet.empty()) {
    if (key.size() != 1) bad("per-letter keys must be single characters, got '" + key + "'");
    const auto pos = inst.alphabet.find(key[0]);
    return pos == std::string::npos ? 0 : static_cast<Letter>(pos + 1);
  }
  try {
    std::size_t used = 0;
    const int letter = std::stoi(key, &used);
    if (used != key.size() || letter < 1) bad("per-letter keys must be positive integers, got '" + key + "'");
    return letter;
  } catch (const std::logic_error&) {
    bad("per-letter keys must be positive integers, got '" + key + "'");
  }
}

// Letters absent from the words are dropped; missing letters are filled in
// by validation.
std::vector<GapConstraint> read_side(ProblemInstance& inst, const json& object, const char* key) {
  if (!object.is_object()) bad(std::string("'") + key + "' must be an object");
  std::vector<GapConstraint> side;
  for (const auto& [name, pair] : object.items()) {
    const Letter a = letter_for_key(inst, name);
    if (a == 0) continue;
    if (side.size() < static_cast<std::size_t>(a)) side.resize(static_cast<std::size_t>(a), GapConstraint(0, Bound{1} << 40));
    side[static_cast<std::size_t>(a - 1)] = read_constraint(pair, std::string(key) + "." + name);
  }
  return side;
}

std::string key_for_letter(const ProblemInstance& inst, Letter a) {
  if (!inst.alphabet.empty()) return std::string(1, inst.alphabet[static_cast<std::size_t>(a - 1)]);
  return std::to_string(a);
}

json write_word(const ProblemInstance& inst, const Word& word) {
  if (inst.alphabet.empty()) return json(std::vector<Letter>(word.symbols().begin(), word.symbols().end()));
  std::string text;
  for (Letter a : word.symbols()) text.push_back(inst.alphabet[static_cast<std::size_t>(a - 1)]);
  return text;
}

json write_side(const ProblemInstance& inst, const std::vector<GapConstraint>& side) {
  json out = json::object();
  for (std::size_t a = 1; a <= side.size(); ++a) {
    if (!inst.alphabet.empty() && a > inst.alphabet.size()) break;
    out[key_for_letter(inst, static_cast<Letter>(a))] = {side[a - 1].lower(), side[a - 1].upper()};
  }
  return out;
}

}  // namespace

ProblemInstance instance_from_json(const json& doc) {
  if (!doc.is_object()) bad("instance must be a JSON object");
  for (const char* key : {"v", "w", "variant"}) {
    if (!doc.contains(key)) throw Error(ErrorCode::MissingField, std::string("missing field '") + key + "'");
  }

  ProblemInstance inst;
  const json& v = doc.at("v");
  const json& w = doc.at("w");
  if (v.is_string() && w.is_string()) {
    TextPair text = words_from_text(v.get<std::string>(), w.get<std::string>());
    inst.v = std::move(text.v);
    inst.w = std::move(text.w);
    inst.alphabet = std::move(text.alphabet);
  } else if (v.is_array() && w.is_array()) {
    inst.v = read_int_word(v, "v");
    inst.w = read_int_word(w, "w");
  } else {
    bad("'v' and 'w' must both be strings or both be integer arrays");
  }

  if (!doc.at("variant").is_string()) bad("'variant' must be a string");
  inst.variant = parse_variant(doc.at("variant").get<std::string>());

  if (doc.contains("sigma")) {
    const Bound sigma = read_bound(doc.at("sigma"), "sigma");
    if (sigma < 0) bad("'sigma' must be non-negative");
    inst.sigma = static_cast<Letter>(sigma);
  }
  if (doc.contains("gaps")) {
    const json& gaps = doc.at("gaps");
    if (!gaps.is_array()) bad("'gaps' must be an array");
    GapTuple tuple;
    for (std::size_t p = 0; p < gaps.size(); ++p) {
      tuple.push_back(read_constraint(gaps[p], "gaps[" + std::to_string(p) + "]"));
    }
    inst.gaps = std::move(tuple);
  }
  if (doc.contains("left") || doc.contains("right")) {
    SigmaConstraints sc;
    if (doc.contains("left")) sc.left = read_side(inst, doc.at("left"), "left");
    if (doc.contains("right")) sc.right = read_side(inst, doc.at("right"), "right");
    inst.sigma_constraints = std::move(sc);
  }
  if (doc.contains("B")) inst.range_bound = static_cast<Index>(read_bound(doc.at("B"), "B"));
  return inst;
}

json instance_to_json(const ProblemInstance& inst) {
  json doc;
  doc["v"] = write_word(inst, inst.v);
  doc["w"] = write_word(inst, inst.w);
  doc["variant"] = std::string(to_string(inst.variant));
  if (inst.sigma > 0) doc["sigma"] = inst.sigma;
  if (inst.gaps) {
    json gaps = json::array();
    for (const auto& c : *inst.gaps) gaps.push_back({c.lower(), c.upper()});
    doc["gaps"] = std::move(gaps);
  }
  if (inst.sigma_constraints) {
    if (!inst.sigma_constraints->left.empty()) doc["left"] = write_side(inst, inst.sigma_constraints->left);
    if (!inst.sigma_constraints->right.empty()) doc["right"] = write_side(inst, inst.sigma_constraints->right);
  }
  if (inst.range_bound) doc["B"] = *inst.range_bound;
  return doc;
}

}  // namespace lcsgc
