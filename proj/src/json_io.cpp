#include "skewcat/json_io.hpp"

namespace skewcat {

namespace {

Labels labels_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array of integers");
  Labels out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SchemaError(std::string(what) + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + name + "\"");
  return *it;
}

}  // namespace

Json to_json(const Partition& p) {
  return Json{{"upper", p.upper_labels()}, {"lower", p.lower_labels()}};
}

Partition partition_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("partition: expected an object");
  try {
    return Partition::ker(labels_from_json(field(j, "upper"), "partition.upper"),
                          labels_from_json(field(j, "lower"), "partition.lower"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("partition: ") + e.what());
  }
}

Json to_json(const Word& w) { return Json(w.letters()); }

Word word_from_json(const Json& j) {
  try {
    return Word::from_letters(labels_from_json(j, "word"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("word: ") + e.what());
  }
}

Json to_json(const BlockPairing& pairing) {
  Json out = Json::array();
  for (const auto& [p, q] : pairing.pairs) out.push_back(Json::array({p, q}));
  return out;
}

BlockPairing pairing_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("pairing: expected an array of pairs");
  BlockPairing out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw SchemaError("pairing: each entry must be [pBlockId, qBlockId]");
    out.pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

namespace {

Json quotient_to_json(const FiniteQuotient& q) {
  Json out;
  out["type"] = "quotient";
  out["rank"] = q.rank;
  out["degree"] = q.degree;
  out["images"] = q.images;
  return out;
}

FiniteQuotient quotient_from_json(const Json& j) {
  FiniteQuotient q;
  q.rank = field(j, "rank").get<int>();
  q.degree = field(j, "degree").get<int>();
  const Json& images = field(j, "images");
  if (!images.is_array()) throw SchemaError("oracle: images must be an array of permutations");
  for (const auto& perm : images) q.images.push_back(labels_from_json(perm, "oracle.images"));
  try {
    q.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return q;
}

}  // namespace

Json to_json(const SubgroupOracle& oracle) {
  if (const FiniteQuotient* q = oracle.quotient_spec()) return quotient_to_json(*q);
  const BoundedSearchSpec* s = oracle.search_spec();
  Json out;
  out["type"] = "search";
  out["rank"] = s->rank;
  Json gens = Json::array();
  for (const auto& g : s->generators) gens.push_back(to_json(g));
  out["generators"] = gens;
  out["maxLength"] = s->max_length;
  out["maxDepth"] = s->max_depth;
  if (s->separating) out["separating"] = quotient_to_json(*s->separating);
  return out;
}

SubgroupOracle oracle_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("oracle: expected an object");
  const std::string type = field(j, "type").get<std::string>();
  try {
    if (type == "quotient") return SubgroupOracle::quotient(quotient_from_json(j));
    if (type == "search") {
      BoundedSearchSpec spec;
      spec.rank = field(j, "rank").get<int>();
      for (const auto& g : field(j, "generators")) spec.generators.push_back(word_from_json(g));
      if (j.contains("maxLength")) spec.max_length = j["maxLength"].get<int>();
      if (j.contains("maxDepth")) spec.max_depth = j["maxDepth"].get<int>();
      if (j.contains("separating")) spec.separating = quotient_from_json(j["separating"]);
      return SubgroupOracle::search(std::move(spec));
    }
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("oracle: ") + e.what());
  }
  throw SchemaError("oracle: type must be \"quotient\" or \"search\"");
}

Json to_json(const LinMap& m) {
  Json out;
  out["n"] = m.dim();
  out["k"] = m.domain_arity();
  out["l"] = m.codomain_arity();
  Json entries = Json::array();
  for (const auto& [key, c] : m.entries()) {
    Json e;
    e["out"] = key.first;
    e["in"] = key.second;
    e["num"] = boost::multiprecision::numerator(c).str();
    e["den"] = boost::multiprecision::denominator(c).str();
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

LinMap linmap_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("linmap: expected an object");
  try {
    LinMap m(field(j, "n").get<int>(), field(j, "k").get<int>(), field(j, "l").get<int>());
    for (const auto& e : field(j, "entries")) {
      const Tuple out = labels_from_json(field(e, "out"), "linmap.out");
      const Tuple in = labels_from_json(field(e, "in"), "linmap.in");
      const Int num(field(e, "num").is_string() ? Int(field(e, "num").get<std::string>())
                                                : Int(field(e, "num").get<long long>()));
      const Int den(field(e, "den").is_string() ? Int(field(e, "den").get<std::string>())
                                                : Int(field(e, "den").get<long long>()));
      if (den == 0) throw SchemaError("linmap: zero denominator");
      m.add_entry(out, in, Rat(num, den));
    }
    return m;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("linmap: ") + e.what());
  }
}

ClosureRequest closure_request_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("closure request: expected an object");
  ClosureRequest req;
  const std::string kind = field(j, "kind").get<std::string>();
  if (kind == "skew")
    req.kind = ClosureKind::Skew;
  else if (kind == "classic")
    req.kind = ClosureKind::Classic;
  else
    throw SchemaError("closure request: kind must be \"skew\" or \"classic\"");
  for (const auto& g : field(j, "generators")) req.generators.push_back(partition_from_json(g));
  req.bounds.max_points = field(j, "maxPoints").get<int>();
  if (j.contains("maxBlocks")) req.bounds.max_blocks = j["maxBlocks"].get<int>();
  return req;
}

Json to_json(const ClosureTruncation& t) {
  Json out;
  out["kind"] = t.kind == ClosureKind::Skew ? "skew" : "classic";
  out["maxPoints"] = t.bounds.max_points;
  if (t.bounds.max_blocks) out["maxBlocks"] = *t.bounds.max_blocks;
  Json elements = Json::array();
  for (const auto& p : t.elements) elements.push_back(to_json(p));
  out["elements"] = std::move(elements);
  out["saturated"] = t.saturated;
  return out;
}

Json to_json(const Report& r) {
  Json out;
  out["suite"] = r.suite;
  out["seed"] = r.seed;
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json e;
    e["description"] = c.description;
    switch (c.status) {
      case CaseStatus::Pass: e["status"] = "pass"; break;
      case CaseStatus::Fail: e["status"] = "fail"; break;
      case CaseStatus::Unknown: e["status"] = "unknown"; break;
    }
    if (!c.witness.empty()) e["witness"] = c.witness;
    cases.push_back(std::move(e));
  }
  out["cases"] = std::move(cases);
  out["failures"] = r.failures();
  out["unknowns"] = r.unknowns();
  return out;
}

}  // namespace skewcat
