#include "polardesign/certificate.hpp"

#include <json.hpp>

namespace polar {

using nlohmann::json;

namespace {

json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return to_decimal(x);
}

BigInt big_from_json(const json& j, const char* key) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return BigInt(s);
  }
  throw CertificateError(std::string("field '") + key + "' must be a nonnegative integer");
}

template <typename T>
T required(const json& doc, const char* key) {
  if (!doc.contains(key)) throw CertificateError(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw CertificateError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string write_certificate(const DesignInstance& instance) {
  json doc;
  doc["family"] = std::string(family_name(instance.space.family));
  doc["q"] = instance.space.q;
  doc["n"] = instance.space.rank;
  doc["t"] = instance.t;
  doc["k"] = instance.k;
  doc["lambda"] = big_to_json(instance.lambda);
  json blocks = json::array();
  for (const auto& b : instance.blocks) blocks.push_back(b.to_rows());
  doc["blocks"] = std::move(blocks);
  if (instance.provenance) {
    doc["provenance"] = {{"method", instance.provenance->method},
                         {"seed", instance.provenance->seed},
                         {"nodes", instance.provenance->nodes}};
  }
  return doc.dump(2) + "\n";
}

DesignInstance read_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw CertificateError("certificate must be a JSON object");

  const auto family_text = required<std::string>(doc, "family");
  const auto family = parse_family(family_text);
  if (!family) throw CertificateError("unknown family '" + family_text + "'");

  DesignInstance out;
  try {
    out.space = describe(*family, required<unsigned>(doc, "n"), required<std::uint64_t>(doc, "q"));
  } catch (const std::invalid_argument& e) {
    throw CertificateError(e.what());
  }
  out.t = required<unsigned>(doc, "t");
  out.k = required<unsigned>(doc, "k");
  if (!doc.contains("lambda")) throw CertificateError("missing field 'lambda'");
  out.lambda = big_from_json(doc["lambda"], "lambda");
  if (out.space.order > FieldTable::kMaxOrder) throw CertificateError("field order exceeds the desk-scale cap");
  const FieldTable field = make_field(static_cast<unsigned>(out.space.order));

  const auto rows = required<std::vector<std::vector<std::vector<int>>>>(doc, "blocks");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      out.blocks.push_back(subspace_from_rows(field, rows[i], out.space.dimension));
    } catch (const std::invalid_argument& e) {
      throw CertificateError("block " + std::to_string(i) + ": " + e.what());
    }
  }
  if (doc.contains("provenance") && !doc["provenance"].is_null()) {
    const json& p = doc["provenance"];
    Provenance prov;
    prov.method = required<std::string>(p, "method");
    prov.seed = required<std::uint64_t>(p, "seed");
    prov.nodes = required<std::uint64_t>(p, "nodes");
    out.provenance = prov;
  }
  return out;
}

}  // namespace polar
