#include "lieinv/cli/json_io.hpp"

namespace lieinv::cli {

namespace {

const BigInt kMaxSafe = BigInt(1) << 53;

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) {
    j[key] = *v;
  } else {
    j[key] = nullptr;
  }
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

json big_to_json(const BigInt& v) {
  if (abs(v) <= kMaxSafe) return v.convert_to<std::int64_t>();
  return v.str();
}

BigInt big_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  return BigInt(j.get<std::int64_t>());
}

void to_json(json& j, const Term& v) {
  j = {{"weight", v.weight}, {"multiplicity", big_to_json(v.multiplicity)}, {"dimension", big_to_json(v.dimension)}};
}

void from_json(const json& j, Term& v) {
  v.weight = j.at("weight").get<Labels>();
  v.multiplicity = big_from_json(j.at("multiplicity"));
  v.dimension = big_from_json(j.at("dimension"));
}

void to_json(json& j, const RootEntry& v) {
  j = {{"factor", v.factor}, {"coords", v.coords}, {"labels", v.labels}};
}

void from_json(const json& j, RootEntry& v) {
  j.at("factor").get_to(v.factor);
  j.at("coords").get_to(v.coords);
  j.at("labels").get_to(v.labels);
}

void to_json(json& j, const InfoResult& v) {
  j = {{"rank", v.rank},
       {"dimension", big_to_json(v.dimension)},
       {"positive_roots", v.positive_roots},
       {"opposition", v.opposition},
       {"highest_roots", v.highest_roots}};
}

void from_json(const json& j, InfoResult& v) {
  j.at("rank").get_to(v.rank);
  v.dimension = big_from_json(j.at("dimension"));
  j.at("positive_roots").get_to(v.positive_roots);
  j.at("opposition").get_to(v.opposition);
  j.at("highest_roots").get_to(v.highest_roots);
}

void to_json(json& j, const InvariantsResult& v) {
  j = {{"closed", v.closed}, {"rule", v.rule}, {"oracle_a", v.oracle_a}, {"agree", v.agree}};
  j["oracle_b"] = v.oracle_b ? big_to_json(*v.oracle_b) : json(nullptr);
}

void from_json(const json& j, InvariantsResult& v) {
  j.at("closed").get_to(v.closed);
  j.at("rule").get_to(v.rule);
  j.at("oracle_a").get_to(v.oracle_a);
  j.at("agree").get_to(v.agree);
  v.oracle_b.reset();
  if (!j.at("oracle_b").is_null()) v.oracle_b = big_from_json(j.at("oracle_b"));
}

void to_json(json& j, const SplitReport& v) {
  j = {{"b", v.b}, {"b_S", v.b_S}, {"b_Lambda", v.b_Lambda}, {"fs", v.fs}, {"self_dual", v.self_dual}};
  put_optional(j, "oracle_b_S", v.oracle_b_S);
  put_optional(j, "oracle_b_Lambda", v.oracle_b_Lambda);
  put_optional(j, "agree", v.agree);
}

void from_json(const json& j, SplitReport& v) {
  j.at("b").get_to(v.b);
  j.at("b_S").get_to(v.b_S);
  j.at("b_Lambda").get_to(v.b_Lambda);
  j.at("fs").get_to(v.fs);
  j.at("self_dual").get_to(v.self_dual);
  v.oracle_b_S = get_optional<std::int64_t>(j, "oracle_b_S");
  v.oracle_b_Lambda = get_optional<std::int64_t>(j, "oracle_b_Lambda");
  v.agree = get_optional<bool>(j, "agree");
}

void to_json(json& j, const FsReport& v) {
  j = {{"fs", v.fs}};
  put_optional(j, "oracle", v.oracle);
  put_optional(j, "agree", v.agree);
}

void from_json(const json& j, FsReport& v) {
  j.at("fs").get_to(v.fs);
  v.oracle = get_optional<int>(j, "oracle");
  v.agree = get_optional<bool>(j, "agree");
}

void to_json(json& j, const Table1Row& v) {
  j = {{"factor", v.factor}, {"j", v.j}, {"alpha", v.alpha_eps}, {"beta", v.beta_eps}, {"beta_coords", v.beta_coords}};
}

void from_json(const json& j, Table1Row& v) {
  j.at("factor").get_to(v.factor);
  j.at("j").get_to(v.j);
  j.at("alpha").get_to(v.alpha_eps);
  j.at("beta").get_to(v.beta_eps);
  j.at("beta_coords").get_to(v.beta_coords);
}

void to_json(json& j, const Table1Result& v) { j = {{"rows", v.rows}, {"note", v.note}}; }

void from_json(const json& j, Table1Result& v) {
  j.at("rows").get_to(v.rows);
  j.at("note").get_to(v.note);
}

void to_json(json& j, const DecomposeResult& v) {
  j = {{"product", v.product},
       {"terms", v.terms},
       {"dimension", big_to_json(v.dimension)},
       {"expected_dimension", big_to_json(v.expected_dimension)}};
}

void from_json(const json& j, DecomposeResult& v) {
  j.at("product").get_to(v.product);
  j.at("terms").get_to(v.terms);
  v.dimension = big_from_json(j.at("dimension"));
  v.expected_dimension = big_from_json(j.at("expected_dimension"));
}

void to_json(json& j, const VerifySummary& v) {
  auto counts = [](const std::vector<std::pair<std::string, std::uint64_t>>& c) {
    json o = json::object();
    for (const auto& [k, n] : c) o[k] = n;
    return o;
  };
  j = {{"weights", v.weights},
       {"pairs", v.pairs},
       {"checks", v.checks},
       {"failures", v.failures},
       {"skipped_cap", v.skipped_cap},
       {"check_counts", counts(v.check_counts)},
       {"failure_counts", counts(v.failure_counts)},
       {"rule_hits", counts(v.rule_hits)}};
  put_optional(j, "first_failure", v.first_failure);
}

void from_json(const json& j, VerifySummary& v) {
  auto counts = [](const json& o) {
    std::vector<std::pair<std::string, std::uint64_t>> c;
    for (const auto& [k, n] : o.items()) c.emplace_back(k, n.get<std::uint64_t>());
    return c;
  };
  j.at("weights").get_to(v.weights);
  j.at("pairs").get_to(v.pairs);
  j.at("checks").get_to(v.checks);
  j.at("failures").get_to(v.failures);
  j.at("skipped_cap").get_to(v.skipped_cap);
  v.check_counts = counts(j.at("check_counts"));
  v.failure_counts = counts(j.at("failure_counts"));
  v.rule_hits = counts(j.at("rule_hits"));
  v.first_failure = get_optional<std::string>(j, "first_failure");
}

}  // namespace lieinv::cli
