#include "hkg/report.hpp"

#include "hkg/errors.hpp"
#include "hkg/oracle.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace hkg {

using nlohmann::json;

namespace {

json int_to_json(const Int& v) {
    if (auto small = to_int64(v)) return *small;
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

json ints_to_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(int_to_json(x));
    return arr;
}

std::vector<Int> ints_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(int_from_json(x));
    return out;
}

json rats_to_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const Rat& r : v) arr.push_back(format_rational(r));
    return arr;
}

std::vector<Rat> rats_from_json(const json& j) {
    std::vector<Rat> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw ParseError("expected a rational string, got " + x.dump());
        out.push_back(parse_rational(x.get<std::string>()));
    }
    return out;
}

std::vector<std::int64_t> oracle_generators(const NumericalSemigroup& s) {
    std::vector<std::int64_t> out;
    for (const Int& g : s.generators()) {
        auto v = to_int64(g);
        if (!v) throw SieveLimitExceeded("generator " + g.str() + " too large for the oracle");
        out.push_back(*v);
    }
    return out;
}

template <typename T>
void check_match(const std::string& what, const T& core, const T& oracle_value) {
    if (core != oracle_value) {
        std::ostringstream os;
        os << "verification mismatch for " << what << ": core reports " << core
           << ", oracle reports " << oracle_value;
        throw VerificationMismatch(os.str());
    }
}

// re-derive every semigroup-backed number through the oracle's independent path
void verify_semigroup(const NumericalSemigroup& s, const std::string& label) {
    auto gens = oracle_generators(s);
    std::int64_t conductor = oracle::oracle_conductor(gens);
    check_match(label + " conductor", s.conductor(), Int(conductor));

    auto ogaps = oracle::oracle_gaps(gens);
    auto cgaps = s.gaps();
    check_match(label + " gap count", Int(cgaps.size()), Int(ogaps.size()));
    for (std::size_t i = 0; i < ogaps.size(); ++i)
        check_match(label + " gap", cgaps[i], Int(ogaps[i]));

    auto omin = oracle::oracle_minimal_generators(gens);
    auto cmin = s.minimal_generators();
    check_match(label + " minimal generator count", Int(cmin.size()), Int(omin.size()));
    for (std::size_t i = 0; i < omin.size(); ++i)
        check_match(label + " minimal generator", cmin[i], Int(omin[i]));

    check_match(label + " symmetry", s.is_symmetric(), oracle::oracle_is_symmetric(gens));

    std::int64_t probe = conductor + gens.front();
    auto table = oracle::oracle_membership(gens, probe);
    auto sieve = s.sieve_upto(probe);
    for (std::int64_t x = 0; x <= probe; ++x)
        check_match(label + " membership at " + std::to_string(x),
                    static_cast<bool>(sieve[static_cast<std::size_t>(x)]),
                    static_cast<bool>(table[static_cast<std::size_t>(x)]));
}

std::vector<Int> chain_order_for(const RamificationData& rd) {
    std::vector<Int> chain;
    if (rd.lower_jumps.front() != 1) chain.push_back(rd.group_order());
    for (std::size_t i = 1; i <= rd.jump_count(); ++i) chain.push_back(rd.semigroup_generator(i));
    return chain;
}

}  // namespace

InvariantReport run_analyze(const RamificationData& rd, const AnalyzeOptions& options) {
    InvariantReport report;
    report.input = rd;
    report.validation = validate(rd, options.warn_only);
    if (!report.validation.valid()) return report;

    auto semigroup = weierstrass_semigroup(rd);
    SemigroupSummary sg;
    sg.generators = semigroup.generators();
    sg.minimal_generators = semigroup.minimal_generators();
    sg.frobenius = semigroup.frobenius();
    sg.conductor = semigroup.conductor();
    sg.gap_count = semigroup.genus();
    sg.gaps = semigroup.gaps();
    sg.symmetric = semigroup.is_symmetric();
    auto chain = make_telescopic_chain(chain_order_for(rd));
    sg.telescopic = {chain.ordered_generators, chain.gcd_tower, chain.is_telescopic};
    report.semigroup = std::move(sg);

    for (const auto& level : tower_semigroups(rd)) {
        TowerSummary ts;
        ts.level = static_cast<std::int64_t>(level.index);
        ts.generators = level.generators;
        ts.group_order_above = level.group_order_above;
        ts.is_rational = level.is_rational;
        ts.frobenius = level.semigroup.frobenius();
        ts.conductor = level.semigroup.conductor();
        report.tower.push_back(std::move(ts));
        if (options.verify)
            verify_semigroup(level.semigroup,
                             "tower level " + std::to_string(level.index));
    }

    report.genus = genus(rd);
    report.different_delta = different_delta(rd);
    report.conductor_brauer = conductor_brauer(rd);
    report.filtration = ramification_filtration(rd);

    JumpsSummary js;
    js.lower = rd.lower_jumps;
    auto upper = lower_to_upper(rd);
    js.upper = upper.values;
    js.orders = upper.orders;
    report.jumps = std::move(js);

    report.hasse_arf = hasse_arf_check(rd);
    report.structural = structural_case(rd);
    report.possible_jumps = possible_jump_check(rd);
    report.p_rank = p_rank(rd);
    report.deformation_dimension = deformation_dimension(rd);

    for (const Int& m : options.poly_powers) {
        auto basis = basis_polydifferentials(rd, m);
        PolyBlock block;
        block.m = m;
        block.degree_bound = basis.degree_bound;
        block.dimension = basis.dimension;
        block.expected_dimension = basis.expected_dimension;
        block.pole_numbers = std::move(basis.pole_numbers);
        block.canonical_degree = canonical_degree_check(rd, m);
        block.indecomposability = indecomposability(rd, m);
        report.polydifferentials.push_back(std::move(block));
    }

    report.big_action = big_action_check(rd);
    if (options.maximal_q) report.maximal_compat = maximal_compat_check(rd, *options.maximal_q);

    if (options.verify) {
        verify_semigroup(semigroup, "H(P)");
        report.oracle_verified = true;
    }
    return report;
}

RamificationData catalog_data(const std::string& family,
                              const std::map<std::string, Int>& params) {
    auto need = [&](const std::string& key) -> const Int& {
        auto it = params.find(key);
        if (it == params.end())
            throw BadParameters("family '" + family + "' needs parameter '" + key + "'");
        return it->second;
    };
    if (family == "artin-schreier") return artin_schreier(need("p"), need("m"));
    if (family == "as-tower") return as_tower(need("p"), need("m"));
    if (family == "hermitian") {
        auto pp = as_prime_power(need("q"));
        if (!pp) throw BadParameters("q = " + need("q").str() + " is not a prime power");
        return hermitian_type(pp->first, pp->second);
    }
    if (family == "gk-shape") return gk_shape(need("q"), need("m1"), need("mr"));
    throw UnknownFamily("unknown family '" + family + "'");
}

JumpSequence run_jumps(const std::string& direction, const Int& p,
                       const std::vector<Int>& exponents, const std::vector<Rat>& values) {
    if (direction == "lower-to-upper") {
        RamificationData rd;
        rd.p = p;
        rd.exponents = exponents;
        for (const Rat& v : values) {
            if (boost::multiprecision::denominator(v) != 1)
                throw ParseError("lower jumps must be integers, got " + format_rational(v));
            rd.lower_jumps.push_back(boost::multiprecision::numerator(v));
        }
        return lower_to_upper(rd);
    }
    if (direction == "upper-to-lower") {
        auto lower = upper_to_lower(values, exponents, p);
        JumpSequence seq;
        seq.kind = JumpSequence::Kind::lower;
        for (std::size_t i = 0; i < lower.size(); ++i) {
            seq.values.emplace_back(lower[i]);
            unsigned h = static_cast<unsigned>(exponents[i].convert_to<std::int64_t>());
            seq.orders.push_back(int_pow(p, h));
        }
        return seq;
    }
    throw BadParameters("direction must be lower-to-upper or upper-to-lower");
}

RamificationData parse_input_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("input must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "p" && key != "exponents" && key != "jumps")
            throw ParseError("unexpected key '" + key + "'");
    }
    if (!j.contains("p") || !j.contains("exponents") || !j.contains("jumps"))
        throw ParseError("input needs keys p, exponents, jumps");
    RamificationData rd;
    rd.p = int_from_json(j.at("p"));
    rd.exponents = ints_from_json(j.at("exponents"));
    rd.lower_jumps = ints_from_json(j.at("jumps"));
    if (!is_prime(rd.p)) throw ParseError("p = " + rd.p.str() + " is not prime");
    return rd;
}

namespace {

json issues_to_json(const std::vector<ValidationIssue>& issues) {
    json arr = json::array();
    for (const auto& issue : issues) arr.push_back({{"name", issue.name}, {"detail", issue.detail}});
    return arr;
}

std::vector<ValidationIssue> issues_from_json(const json& j) {
    std::vector<ValidationIssue> out;
    for (const auto& x : j) out.push_back({x.at("name"), x.at("detail")});
    return out;
}

}  // namespace

json report_to_json(const InvariantReport& r) {
    json j;
    j["input"] = {{"p", int_to_json(r.input.p)},
                  {"exponents", ints_to_json(r.input.exponents)},
                  {"jumps", ints_to_json(r.input.lower_jumps)}};
    j["validation"] = {{"valid", r.validation.valid()},
                       {"failures", issues_to_json(r.validation.failures)},
                       {"warnings", issues_to_json(r.validation.warnings)}};
    if (r.semigroup) {
        const auto& s = *r.semigroup;
        j["semigroup"] = {{"generators", ints_to_json(s.generators)},
                          {"minimal_generators", ints_to_json(s.minimal_generators)},
                          {"frobenius", int_to_json(s.frobenius)},
                          {"conductor", int_to_json(s.conductor)},
                          {"gap_count", int_to_json(s.gap_count)},
                          {"gaps", ints_to_json(s.gaps)},
                          {"symmetric", s.symmetric},
                          {"telescopic",
                           {{"ordered_generators", ints_to_json(s.telescopic.ordered_generators)},
                            {"gcd_tower", ints_to_json(s.telescopic.gcd_tower)},
                            {"is_telescopic", s.telescopic.is_telescopic}}}};
    }
    if (!r.tower.empty()) {
        json arr = json::array();
        for (const auto& t : r.tower)
            arr.push_back({{"level", t.level},
                           {"generators", ints_to_json(t.generators)},
                           {"group_order_above", int_to_json(t.group_order_above)},
                           {"is_rational", t.is_rational},
                           {"frobenius", int_to_json(t.frobenius)},
                           {"conductor", int_to_json(t.conductor)}});
        j["tower"] = std::move(arr);
    }
    if (r.genus) j["genus"] = int_to_json(*r.genus);
    if (r.different_delta) j["different_delta"] = int_to_json(*r.different_delta);
    if (r.conductor_brauer) j["conductor_brauer"] = int_to_json(*r.conductor_brauer);
    if (!r.filtration.empty()) {
        json arr = json::array();
        for (const auto& seg : r.filtration)
            arr.push_back({{"from", int_to_json(seg.from)},
                           {"to", int_to_json(seg.to)},
                           {"order", int_to_json(seg.order)}});
        j["ramification_filtration"] = std::move(arr);
    }
    if (r.jumps)
        j["jumps"] = {{"lower", ints_to_json(r.jumps->lower)},
                      {"upper", rats_to_json(r.jumps->upper)},
                      {"orders", ints_to_json(r.jumps->orders)}};
    if (r.hasse_arf) {
        json pairs = json::array();
        for (const auto& p : r.hasse_arf->pairs)
            pairs.push_back({{"index", p.index},
                             {"modulus", int_to_json(p.modulus)},
                             {"jump_congruence", p.jump_congruence},
                             {"generator_congruence", p.generator_congruence}});
        j["hasse_arf"] = {{"pairs", std::move(pairs)}, {"all_hold", r.hasse_arf->all_hold}};
    }
    if (r.structural) {
        json claims = json::array();
        for (const auto& c : r.structural->claims)
            claims.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
        j["structural_case"] = {{"case", r.structural->case_tag},
                                {"claims", std::move(claims)},
                                {"all_hold", r.structural->all_hold}};
    }
    if (r.possible_jumps) {
        json wits = json::array();
        for (const auto& w : r.possible_jumps->witnesses) {
            json entry = {{"jump", int_to_json(w.jump)}, {"found", w.found}};
            if (w.found) entry["pole_number"] = int_to_json(w.pole_number);
            wits.push_back(std::move(entry));
        }
        j["possible_jumps"] = {{"consistent", r.possible_jumps->consistent},
                               {"witnesses", std::move(wits)}};
    }
    if (r.p_rank) j["p_rank"] = int_to_json(*r.p_rank);
    if (r.deformation_dimension)
        j["deformation_dimension"] = int_to_json(*r.deformation_dimension);
    if (!r.polydifferentials.empty()) {
        json arr = json::array();
        for (const auto& b : r.polydifferentials)
            arr.push_back(
                {{"m", int_to_json(b.m)},
                 {"degree_bound", int_to_json(b.degree_bound)},
                 {"dimension", int_to_json(b.dimension)},
                 {"expected_dimension", int_to_json(b.expected_dimension)},
                 {"pole_numbers", ints_to_json(b.pole_numbers)},
                 {"canonical_degree",
                  {{"jump_side", int_to_json(b.canonical_degree.jump_side)},
                   {"genus_side", int_to_json(b.canonical_degree.genus_side)},
                   {"holds", b.canonical_degree.holds}}},
                 {"indecomposability",
                  {{"summand_bound", int_to_json(b.indecomposability.summand_bound)},
                   {"invariant_count", int_to_json(b.indecomposability.invariant_count)},
                   {"forced_indecomposable", b.indecomposability.forced_indecomposable}}}});
        j["polydifferentials"] = std::move(arr);
    }
    if (r.big_action)
        j["big_action"] = {{"group_order", int_to_json(r.big_action->group_order)},
                           {"genus", int_to_json(r.big_action->genus)},
                           {"is_big", r.big_action->is_big},
                           {"first_jump_is_one", r.big_action->first_jump_is_one},
                           {"second_group_nontrivial", r.big_action->second_group_nontrivial},
                           {"forces_indecomposable_m1", r.big_action->forces_indecomposable_m1}};
    if (r.maximal_compat)
        j["maximal_compat"] = {
            {"q", int_to_json(r.maximal_compat->q)},
            {"q_within_group_order", r.maximal_compat->q_within_group_order},
            {"q_is_pole", r.maximal_compat->q_is_pole},
            {"q_plus_one_is_pole", r.maximal_compat->q_plus_one_is_pole},
            {"frobenius_degree_matches", r.maximal_compat->frobenius_degree_matches},
            {"passes_necessary_conditions", r.maximal_compat->passes_necessary_conditions}};
    j["oracle_verified"] = r.oracle_verified;
    return j;
}

InvariantReport report_from_json(const json& j) {
    InvariantReport r;
    const auto& input = j.at("input");
    r.input.p = int_from_json(input.at("p"));
    r.input.exponents = ints_from_json(input.at("exponents"));
    r.input.lower_jumps = ints_from_json(input.at("jumps"));
    r.validation.failures = issues_from_json(j.at("validation").at("failures"));
    r.validation.warnings = issues_from_json(j.at("validation").at("warnings"));
    if (j.contains("semigroup")) {
        const auto& s = j.at("semigroup");
        SemigroupSummary sg;
        sg.generators = ints_from_json(s.at("generators"));
        sg.minimal_generators = ints_from_json(s.at("minimal_generators"));
        sg.frobenius = int_from_json(s.at("frobenius"));
        sg.conductor = int_from_json(s.at("conductor"));
        sg.gap_count = int_from_json(s.at("gap_count"));
        sg.gaps = ints_from_json(s.at("gaps"));
        sg.symmetric = s.at("symmetric").get<bool>();
        const auto& t = s.at("telescopic");
        sg.telescopic = {ints_from_json(t.at("ordered_generators")),
                         ints_from_json(t.at("gcd_tower")), t.at("is_telescopic").get<bool>()};
        r.semigroup = std::move(sg);
    }
    if (j.contains("tower")) {
        for (const auto& t : j.at("tower")) {
            TowerSummary ts;
            ts.level = t.at("level").get<std::int64_t>();
            ts.generators = ints_from_json(t.at("generators"));
            ts.group_order_above = int_from_json(t.at("group_order_above"));
            ts.is_rational = t.at("is_rational").get<bool>();
            ts.frobenius = int_from_json(t.at("frobenius"));
            ts.conductor = int_from_json(t.at("conductor"));
            r.tower.push_back(std::move(ts));
        }
    }
    if (j.contains("genus")) r.genus = int_from_json(j.at("genus"));
    if (j.contains("different_delta")) r.different_delta = int_from_json(j.at("different_delta"));
    if (j.contains("conductor_brauer"))
        r.conductor_brauer = int_from_json(j.at("conductor_brauer"));
    if (j.contains("ramification_filtration")) {
        for (const auto& seg : j.at("ramification_filtration"))
            r.filtration.push_back({int_from_json(seg.at("from")), int_from_json(seg.at("to")),
                                    int_from_json(seg.at("order"))});
    }
    if (j.contains("jumps")) {
        JumpsSummary js;
        js.lower = ints_from_json(j.at("jumps").at("lower"));
        js.upper = rats_from_json(j.at("jumps").at("upper"));
        js.orders = ints_from_json(j.at("jumps").at("orders"));
        r.jumps = std::move(js);
    }
    if (j.contains("hasse_arf")) {
        HasseArfReport h;
        for (const auto& p : j.at("hasse_arf").at("pairs")) {
            HasseArfPair pair;
            pair.index = p.at("index").get<std::size_t>();
            pair.modulus = int_from_json(p.at("modulus"));
            pair.jump_congruence = p.at("jump_congruence").get<bool>();
            pair.generator_congruence = p.at("generator_congruence").get<bool>();
            h.pairs.push_back(std::move(pair));
        }
        h.all_hold = j.at("hasse_arf").at("all_hold").get<bool>();
        r.hasse_arf = std::move(h);
    }
    if (j.contains("structural_case")) {
        StructuralCaseReport s;
        s.case_tag = j.at("structural_case").at("case").get<std::string>();
        for (const auto& c : j.at("structural_case").at("claims"))
            s.claims.push_back({c.at("name").get<std::string>(), c.at("holds").get<bool>(),
                                c.at("detail").get<std::string>()});
        s.all_hold = j.at("structural_case").at("all_hold").get<bool>();
        r.structural = std::move(s);
    }
    if (j.contains("possible_jumps")) {
        PossibleJumpReport p;
        p.consistent = j.at("possible_jumps").at("consistent").get<bool>();
        for (const auto& w : j.at("possible_jumps").at("witnesses")) {
            JumpWitness wit;
            wit.jump = int_from_json(w.at("jump"));
            wit.found = w.at("found").get<bool>();
            if (wit.found) wit.pole_number = int_from_json(w.at("pole_number"));
            p.witnesses.push_back(std::move(wit));
        }
        r.possible_jumps = std::move(p);
    }
    if (j.contains("p_rank")) r.p_rank = int_from_json(j.at("p_rank"));
    if (j.contains("deformation_dimension"))
        r.deformation_dimension = int_from_json(j.at("deformation_dimension"));
    if (j.contains("polydifferentials")) {
        for (const auto& b : j.at("polydifferentials")) {
            PolyBlock block;
            block.m = int_from_json(b.at("m"));
            block.degree_bound = int_from_json(b.at("degree_bound"));
            block.dimension = int_from_json(b.at("dimension"));
            block.expected_dimension = int_from_json(b.at("expected_dimension"));
            block.pole_numbers = ints_from_json(b.at("pole_numbers"));
            block.canonical_degree.m = block.m;
            block.canonical_degree.jump_side =
                int_from_json(b.at("canonical_degree").at("jump_side"));
            block.canonical_degree.genus_side =
                int_from_json(b.at("canonical_degree").at("genus_side"));
            block.canonical_degree.holds = b.at("canonical_degree").at("holds").get<bool>();
            block.indecomposability.m = block.m;
            block.indecomposability.summand_bound =
                int_from_json(b.at("indecomposability").at("summand_bound"));
            block.indecomposability.invariant_count =
                int_from_json(b.at("indecomposability").at("invariant_count"));
            block.indecomposability.forced_indecomposable =
                b.at("indecomposability").at("forced_indecomposable").get<bool>();
            r.polydifferentials.push_back(std::move(block));
        }
    }
    if (j.contains("big_action")) {
        BigActionReport b;
        b.group_order = int_from_json(j.at("big_action").at("group_order"));
        b.genus = int_from_json(j.at("big_action").at("genus"));
        b.is_big = j.at("big_action").at("is_big").get<bool>();
        b.first_jump_is_one = j.at("big_action").at("first_jump_is_one").get<bool>();
        b.second_group_nontrivial = j.at("big_action").at("second_group_nontrivial").get<bool>();
        b.forces_indecomposable_m1 =
            j.at("big_action").at("forces_indecomposable_m1").get<bool>();
        r.big_action = std::move(b);
    }
    if (j.contains("maximal_compat")) {
        MaximalCompatReport m;
        m.q = int_from_json(j.at("maximal_compat").at("q"));
        m.q_within_group_order = j.at("maximal_compat").at("q_within_group_order").get<bool>();
        m.q_is_pole = j.at("maximal_compat").at("q_is_pole").get<bool>();
        m.q_plus_one_is_pole = j.at("maximal_compat").at("q_plus_one_is_pole").get<bool>();
        m.frobenius_degree_matches =
            j.at("maximal_compat").at("frobenius_degree_matches").get<bool>();
        m.passes_necessary_conditions =
            j.at("maximal_compat").at("passes_necessary_conditions").get<bool>();
        r.maximal_compat = std::move(m);
    }
    r.oracle_verified = j.value("oracle_verified", false);
    return r;
}

namespace {

std::string join_ints(const std::vector<Int>& v, const char* sep = " ") {
    std::string out;
    for (const Int& x : v) {
        if (!out.empty()) out += sep;
        out += x.str();
    }
    return out;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

void render_table(const InvariantReport& r, std::ostream& os) {
    auto line = [&os](const std::string& k, const std::string& v) {
        os << "  " << k;
        for (std::size_t i = k.size(); i < 28; ++i) os << ' ';
        os << v << '\n';
    };
    os << "HKG invariant analysis\n";
    line("p", r.input.p.str());
    line("exponents", join_ints(r.input.exponents));
    line("lower jumps", join_ints(r.input.lower_jumps));
    if (!r.validation.valid()) {
        os << "validation FAILED\n";
        for (const auto& f : r.validation.failures) line(f.name, f.detail);
        return;
    }
    line("validation", r.validation.warnings.empty() ? "ok" : "ok (with warnings)");
    for (const auto& w : r.validation.warnings) line("warning: " + w.name, w.detail);
    if (r.genus) line("genus", r.genus->str());
    if (r.conductor_brauer) line("conductor (chain formula)", r.conductor_brauer->str());
    if (r.different_delta) line("different delta", r.different_delta->str());
    if (r.p_rank) line("p-rank", r.p_rank->str());
    if (r.deformation_dimension) line("deformation dimension", r.deformation_dimension->str());

    if (r.semigroup) {
        const auto& s = *r.semigroup;
        os << "Weierstrass semigroup H(P)\n";
        line("generators", join_ints(s.generators));
        line("minimal generators", join_ints(s.minimal_generators));
        line("frobenius", s.frobenius.str());
        line("conductor", s.conductor.str());
        line("gaps (" + s.gap_count.str() + ")", join_ints(s.gaps));
        line("symmetric", yesno(s.symmetric));
        line("telescopic", yesno(s.telescopic.is_telescopic) + "  chain " +
                               join_ints(s.telescopic.ordered_generators) + "  gcd tower " +
                               join_ints(s.telescopic.gcd_tower));
    }
    if (!r.filtration.empty()) {
        os << "ramification filtration\n";
        for (const auto& seg : r.filtration)
            line("|G_i| for i in [" + seg.from.str() + ", " + seg.to.str() + "]",
                 seg.order.str());
        line("beyond", "trivial");
    }
    if (r.jumps) {
        os << "jumps\n";
        line("lower", join_ints(r.jumps->lower));
        std::string upper;
        for (const auto& u : r.jumps->upper) {
            if (!upper.empty()) upper += " ";
            upper += format_rational(u);
        }
        line("upper", upper);
        line("orders", join_ints(r.jumps->orders));
    }
    if (r.hasse_arf) {
        os << "Hasse-Arf congruences (necessary for an abelian group)\n";
        if (r.hasse_arf->pairs.empty()) {
            line("pairs", "none (single jump); vacuously satisfied");
        } else {
            for (const auto& p : r.hasse_arf->pairs)
                line("pair " + std::to_string(p.index) + " mod " + p.modulus.str(),
                     p.jump_congruence ? "holds" : "fails");
            line("verdict", r.hasse_arf->all_hold
                                ? "compatible with an abelian group"
                                : "fails, so the group is not abelian");
        }
    }
    if (r.structural) {
        os << "structural case " << r.structural->case_tag << "\n";
        for (const auto& c : r.structural->claims)
            line(std::string(c.holds ? "[ok]   " : "[FAIL] ") + c.name, c.detail);
    }
    if (r.possible_jumps) {
        os << "jump form m_r - m_k\n";
        for (const auto& w : r.possible_jumps->witnesses)
            line("jump " + w.jump.str(),
                 w.found ? "m_k = " + w.pole_number.str() : "no witnessing pole number");
        line("consistent", yesno(r.possible_jumps->consistent));
    }
    if (!r.tower.empty()) {
        os << "field tower\n";
        for (const auto& t : r.tower)
            line("level " + std::to_string(t.level),
                 "generators " + join_ints(t.generators) + "  group above " +
                     t.group_order_above.str() + "  conductor " + t.conductor.str() +
                     (t.is_rational ? "  rational" : ""));
    }
    if (!r.polydifferentials.empty()) {
        os << "polydifferentials\n";
        for (const auto& b : r.polydifferentials) {
            line("m = " + b.m.str(),
                 "dimension " + b.dimension.str() + " (expected " + b.expected_dimension.str() +
                     "), degree bound " + b.degree_bound.str());
            line("  canonical degree", b.canonical_degree.jump_side.str() + " = " +
                                           b.canonical_degree.genus_side.str() +
                                           (b.canonical_degree.holds ? " (holds)" : " (FAILS)"));
            line("  summand bound",
                 b.indecomposability.summand_bound.str() + ", invariants " +
                     b.indecomposability.invariant_count.str() +
                     (b.indecomposability.forced_indecomposable ? ", forced indecomposable"
                                                                : ""));
        }
    }
    if (r.big_action) {
        os << "big action\n";
        line("|G|(p-1) > 2pg", yesno(r.big_action->is_big));
        line("first jump is 1", yesno(r.big_action->first_jump_is_one));
        line("G_2 nontrivial", yesno(r.big_action->second_group_nontrivial));
        if (r.big_action->forces_indecomposable_m1)
            line("holomorphic differentials", "indecomposable (big action)");
    }
    if (r.maximal_compat) {
        os << "maximal-curve compatibility (q = " << r.maximal_compat->q.str() << ")\n";
        line("q <= |G_1(P)|", yesno(r.maximal_compat->q_within_group_order));
        line("q is a pole number", yesno(r.maximal_compat->q_is_pole));
        line("q+1 is a pole number", yesno(r.maximal_compat->q_plus_one_is_pole));
        line("m_r = q+1", yesno(r.maximal_compat->frobenius_degree_matches));
        line("necessary conditions", yesno(r.maximal_compat->passes_necessary_conditions));
    }
    line("oracle verified", yesno(r.oracle_verified));
}

}  // namespace hkg
