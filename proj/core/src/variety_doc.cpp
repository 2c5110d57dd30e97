#include "kstab/variety_doc.hpp"

#include "json.hpp"

namespace kstab {

namespace {

BigInt json_to_bigint(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw PreconditionError("expected an integer (or integer string)");
}

Rational json_to_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw PreconditionError("expected a rational like \"3/2\" or an integer");
}

}  // namespace

VarietyDocument parse_variety_document(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw PreconditionError(std::string("variety document is not valid JSON: ") +
                            e.what());
  }
  if (!j.contains("weights") || !j.at("weights").is_array() ||
      j.at("weights").empty())
    throw PreconditionError("variety document needs a nonempty 'weights' matrix");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& jrow : j.at("weights")) {
    std::vector<BigInt> row;
    for (const auto& entry : jrow) row.push_back(json_to_bigint(entry));
    rows.push_back(std::move(row));
  }
  const unsigned r = static_cast<unsigned>(rows.size());
  const unsigned n = static_cast<unsigned>(rows.front().size());
  TorusWeights weights(r, n, std::move(rows));

  std::vector<std::string> names;
  if (j.contains("variables"))
    for (const auto& v : j.at("variables")) names.push_back(v.get<std::string>());
  if (!names.empty() && names.size() != n)
    throw PreconditionError("'variables' length does not match the weight matrix");

  std::vector<Monomial> monomials;
  if (j.contains("monomials")) {
    for (const auto& jm : j.at("monomials")) {
      Monomial mono;
      for (const auto& e : jm) mono.push_back(e.get<long>());
      monomials.push_back(std::move(mono));
    }
  }
  VarietyDocument doc{
      j.value("name", std::string("custom")),
      monomials.empty()
          ? ConeVariety::ambient(std::move(weights), std::move(names))
          : ConeVariety::hypersurface(std::move(weights), std::move(monomials),
                                      std::move(names)),
      {},
      j.value("assume_normal", false),
      std::nullopt};

  if (j.contains("degenerations")) {
    for (const auto& jd : j.at("degenerations")) {
      std::vector<BigInt> w;
      for (const auto& e : jd) w.push_back(json_to_bigint(e));
      if (w.size() != doc.variety.num_coords())
        throw PreconditionError("degeneration vector length does not match N");
      doc.degenerations.push_back(std::move(w));
    }
  }
  if (j.contains("reeb_point")) {
    ReebVector xi;
    for (const auto& e : j.at("reeb_point")) xi.push_back(json_to_rational(e));
    if (xi.size() != doc.variety.rank())
      throw PreconditionError("'reeb_point' length does not match the torus rank");
    doc.reeb_point = std::move(xi);
  }
  return doc;
}

std::optional<ReebVector> find_reeb_vector(const ConeVariety& v) {
  const unsigned r = v.rank();
  if (r > 4) return std::nullopt;
  const long radius = 8;
  std::vector<long> idx(r, -radius);
  while (true) {
    ReebVector xi(r);
    for (unsigned i = 0; i < r; ++i) xi[i] = Rational(idx[i]);
    if (reeb_cone_contains(v, xi)) return xi;
    unsigned i = 0;
    for (; i < r; ++i) {
      if (idx[i] < radius) {
        ++idx[i];
        break;
      }
      idx[i] = -radius;
    }
    if (i == r) return std::nullopt;
  }
}

}  // namespace kstab
