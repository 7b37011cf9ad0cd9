#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gnoe/constructions.hpp"
#include "gnoe/textio.hpp"

namespace gnoe {

namespace {

using Json = nlohmann::json;

[[noreturn]] void config_error(const std::string& why) { throw Error(ErrorCode::ConfigError, why); }

AdditiveMap load_map(const Json& node, const char* key, const RingHandle& ring) {
  if (!node.contains(key)) {
    if (std::string(key) == "delta") return AdditiveMap::zero(ring);
    config_error(std::string("missing \"") + key + "\"");
  }
  const Json& value = node.at(key);
  if (value.is_string()) return parse_map(value.get<std::string>(), ring);
  if (value.is_object() && value.contains("table")) {
    const auto size = ring->cardinality();
    if (!size) config_error(std::string(key) + ": table maps need a finite ring");
    const Json& images = value.at("table");
    if (!images.is_array() || images.size() != *size)
      config_error(std::string(key) + ": table needs " + std::to_string(*size) + " entries");
    std::vector<RingElement> parsed;
    for (const auto& image : images) parsed.push_back(ring->parse(image.get<std::string>()));
    return AdditiveMap::table(ring, std::move(parsed));
  }
  config_error(std::string(key) + " must be a map string or {\"table\": [...]}");
}

std::size_t load_count(const Json& node, const char* key, std::size_t fallback) {
  if (!node.contains(key)) return fallback;
  const Json& value = node.at(key);
  if (!value.is_number_unsigned()) config_error(std::string("experiment.") + key + " must be a natural number");
  return value.get<std::size_t>();
}

ExtensionConfig build(const Json& doc) {
  if (!doc.is_object()) config_error("top level must be an object");
  if (!doc.contains("version") || doc.at("version") != 1) config_error("\"version\" must be 1");
  if (!doc.contains("ring") || !doc.at("ring").is_string()) config_error("\"ring\" must be a descriptor string");

  const RingHandle ring = build_ring(parse_descriptor(doc.at("ring").get<std::string>()));
  const AdditiveMap sigma = load_map(doc, "sigma", ring);
  const AdditiveMap delta = load_map(doc, "delta", ring);

  Mode mode = Mode::Standard;
  if (doc.contains("mode")) {
    const std::string text = doc.at("mode").get<std::string>();
    if (text == "flipped") mode = Mode::Flipped;
    else if (text != "standard") config_error("\"mode\" must be standard or flipped");
  }

  std::optional<RingElement> mu;
  if (doc.contains("quotient")) {
    const Json& quotient = doc.at("quotient");
    if (!quotient.is_object() || !quotient.contains("mu")) config_error("\"quotient\" needs \"mu\"");
    const RingHandle field = ring->base_field();
    if (!field) config_error("a quotient needs an algebra over a field");
    const Json& value = quotient.at("mu");
    mu = field->parse(value.is_string() ? value.get<std::string>() : value.dump());
  }

  ExtensionConfig config;
  config.extension = Extension::make(ring, sigma, delta, mode, std::move(mu));
  if (doc.contains("experiment")) {
    const Json& experiment = doc.at("experiment");
    if (!experiment.is_object()) config_error("\"experiment\" must be an object");
    config.experiment.bound = load_count(experiment, "bound", config.experiment.bound);
    config.experiment.samples = load_count(experiment, "samples", config.experiment.samples);
    config.experiment.seed = load_count(experiment, "seed", config.experiment.seed);
  }
  return config;
}

}  // namespace

ExtensionConfig parse_config(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::exception& e) {
    config_error(std::string("malformed JSON: ") + e.what());
  }
  try {
    return build(doc);
  } catch (const Json::exception& e) {
    config_error(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigError) throw;
    config_error(e.what());
  }
}

ExtensionConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

}  // namespace gnoe
