#pragma once

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

namespace enrichcat {

using Json = nlohmann::json;

enum class Outcome { Yes, No, Unknown };

std::string to_string(Outcome o);

// Three-valued answer. Yes/No carry a certificate describing the witness or
// the violation; Unknown carries the bound that was exhausted.
struct Verdict {
  Outcome outcome = Outcome::Unknown;
  Json certificate = Json::object();
  std::optional<int> bound;

  static Verdict yes(Json cert = Json::object()) {
    return {Outcome::Yes, std::move(cert), std::nullopt};
  }
  static Verdict no(Json cert = Json::object()) {
    return {Outcome::No, std::move(cert), std::nullopt};
  }
  static Verdict unknown(int bound_hit, Json cert = Json::object()) {
    return {Outcome::Unknown, std::move(cert), bound_hit};
  }

  bool is_yes() const { return outcome == Outcome::Yes; }
  bool is_no() const { return outcome == Outcome::No; }
  bool is_unknown() const { return outcome == Outcome::Unknown; }

  Json to_json() const;
};

// Thrown when a bounded search structure would exceed its configured ceiling.
// Deciders catch it and degrade to Unknown; anything else lets it surface.
struct ceiling_error : std::runtime_error {
  explicit ceiling_error(const std::string& what) : std::runtime_error(what) {}
};

// Search and construction ceilings. The single user-facing knob is `search`
// (CLI --bound / ENRICAT_BOUND); the rest guard against combinatorial blowup.
struct Bounds {
  int search = 3;           // oracle arities, Cauchy summands, completion width
  int max_hom_set = 200000; // enumeration ceiling for hom_set
  int max_object = 200000;  // carrier-size ceiling for constructed objects
  int word_length = 8;      // word closure depth for category colimits
  int max_words = 20000;    // word count ceiling for category colimits
};

}  // namespace enrichcat
