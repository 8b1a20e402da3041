#include "tdl/report.hpp"

#include "json.hpp"

#include <sstream>

namespace tdl {

namespace {

using Json = nlohmann::ordered_json;

std::string mode_name(CensusRecord::Mode mode) {
    return mode == CensusRecord::Mode::exhaustive ? "exhaustive" : "monte-carlo";
}

Json census_meta(const CensusRecord& record) {
    Json j;
    j["n"] = record.n;
    j["family"] = family_name(record.family);
    j["pattern"] = record.pattern;
    j["mode"] = mode_name(record.mode);
    j["total"] = record.total.str();
    if (record.mode == CensusRecord::Mode::monte_carlo) {
        j["samples"] = record.samples;
        j["seed"] = record.seed;
        j["attempts"] = record.attempts;
    }
    return j;
}

}  // namespace

std::string census_csv(const CensusRecord& record) {
    std::ostringstream out;
    out << "n,family,pattern,mode,predicate,count,total\n";
    auto row = [&](const std::string& predicate, const std::string& count) {
        out << record.n << ',' << family_name(record.family) << ',' << record.pattern << ','
            << mode_name(record.mode) << ',' << predicate << ',' << count << ','
            << record.total.str() << '\n';
    };
    row("total", record.total.str());
    for (const auto& [key, value] : record.tallies) row(key, value.str());
    return out.str();
}

std::string census_json(const CensusRecord& record) {
    Json j = census_meta(record);
    Json tallies = Json::object();
    for (const auto& [key, value] : record.tallies) tallies[key] = value.str();
    j["tallies"] = tallies;
    return j.dump(2) + "\n";
}

std::string extremal_json(const ExtremalResult& result, bool include_witnesses) {
    Json j;
    j["n"] = result.query.n;
    j["pattern"] = result.query.pattern.to_string();
    j["family"] = family_name(result.query.family);
    j["weight"] = result.query.weight.to_string();
    j["optimum_f1"] = result.optimum.f1;
    j["optimum_f2"] = result.optimum.f2;
    j["optimum_value"] = weighted_value(result.optimum, result.query.weight);
    j["witness_count"] = result.witness_count;
    j["node_count"] = result.node_count;
    if (include_witnesses) {
        Json w = Json::array();
        for (const auto& g : result.witnesses) w.push_back(g.to_text());
        j["witnesses"] = w;
    }
    return j.dump(2) + "\n";
}

std::string trend_csv(const TrendReport& report) {
    std::ostringstream out;
    out << "n,family,pattern,predicate,mode,total,hits,fraction\n";
    for (const auto& row : report.rows) {
        std::ostringstream frac;
        frac.precision(12);
        frac << row.fraction;
        out << row.n << ',' << family_name(report.family) << ',' << report.pattern << ','
            << report.predicate << ',' << mode_name(row.mode) << ',' << row.total.str() << ','
            << row.hits.str() << ',' << frac.str() << '\n';
    }
    return out.str();
}

std::string trend_json(const TrendReport& report) {
    Json j;
    j["pattern"] = report.pattern;
    j["family"] = family_name(report.family);
    j["predicate"] = report.predicate;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["n"] = row.n;
        r["mode"] = mode_name(row.mode);
        r["total"] = row.total.str();
        r["hits"] = row.hits.str();
        r["fraction"] = row.fraction;
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string fas_json(const Digraph& g, const VertexOrdering& ordering) {
    Json j;
    j["graph"] = g.to_text();
    j["beta"] = ordering.backwards;
    j["ordering"] = ordering.sigma;
    j["acyclic"] = ordering.backwards == 0;
    return j.dump(2) + "\n";
}

std::string partition_json(const Digraph& g, const Partition& partition, bool local_opt) {
    Json j;
    j["graph"] = g.to_text();
    j["k"] = partition.k;
    j["non_crossing"] = partition.non_crossing;
    j["classes"] = partition.classes;
    j["locally_optimal"] = local_opt;
    return j.dump(2) + "\n";
}

std::string co_degree_json(const CoDegreeProfile& profile, const std::string& pattern,
                           const DeltaBoundReport* bound_report) {
    Json j;
    j["pattern"] = pattern;
    j["ground_n"] = profile.ground_n;
    j["r"] = profile.r;
    j["edge_count"] = profile.edge_count;
    j["tau"] = profile.tau;
    j["average_degree"] = static_cast<double>(profile.average_degree);
    Json sums = Json::array();
    for (const auto& s : profile.degree_sums) sums.push_back(s.str());
    j["degree_sums"] = sums;
    Json deltas = Json::array();
    for (auto d : profile.delta_j) deltas.push_back(static_cast<double>(d));
    j["delta_j"] = deltas;
    j["delta"] = static_cast<double>(profile.delta);
    if (bound_report) j["bound_rows"] = Json::parse(delta_bound_json(*bound_report));
    return j.dump(2) + "\n";
}

std::string delta_bound_json(const DeltaBoundReport& report) {
    Json j;
    j["pattern"] = report.pattern;
    j["gamma"] = report.gamma;
    j["pass"] = report.pass;
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json r;
        r["N"] = row.base_n;
        r["tau"] = row.tau;
        r["delta"] = static_cast<double>(row.delta);
        r["bound"] = static_cast<double>(row.bound);
        r["margin"] = static_cast<double>(row.margin);
        r["asserted"] = row.asserted;
        r["ok"] = row.ok;
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

std::string switch_forward_json(const SwitchForwardReport& report) {
    Json j;
    j["n"] = report.n;
    j["m2"] = report.m2;
    j["cycle_len"] = report.cycle_len;
    j["restricted_edge_max"] = report.restricted_edge_max;
    j["source_count"] = report.source_count.str();
    j["images_per_source"] = report.images_per_source.str();
    j["distinct_images"] = report.distinct_images.str();
    j["max_preimages"] = report.max_preimages;
    j["preimage_bound"] = report.preimage_bound.str();
    j["per_source_degree_ok"] = report.per_source_degree_ok;
    j["images_well_formed"] = report.images_well_formed;
    j["preimage_bound_ok"] = report.preimage_bound_ok;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

std::string switch_backward_json(const SwitchBackwardReport& report) {
    Json j;
    j["n"] = report.n;
    j["m1"] = report.m1;
    j["cycle_len"] = report.cycle_len;
    j["class_count"] = report.class_count.str();
    j["distinct_images"] = report.distinct_images.str();
    j["max_preimages"] = report.max_preimages;
    j["bound"] = report.bound.str();
    j["images_acyclic"] = report.images_acyclic;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

std::string switch_ratio_json(const SwitchRatioReport& report) {
    Json j;
    j["n"] = report.n;
    j["m1"] = report.m1;
    j["m2"] = report.m2;
    j["cycle_len"] = report.cycle_len;
    j["class_m1"] = report.class_m1.str();
    j["class_m2"] = report.class_m2.str();
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

std::string sandwich_json(const SandwichReport& report) {
    Json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["family"] = family_name(report.family);
    j["count"] = report.count.str();
    j["lower_num"] = report.lower_num.str();
    j["lower_den"] = report.lower_den.str();
    j["middle_num"] = report.middle_num.str();
    j["middle_den"] = report.middle_den.str();
    j["upper"] = report.upper.str();
    j["holds_lower"] = report.holds_lower;
    j["holds_middle"] = report.holds_middle;
    j["holds_upper"] = report.holds_upper;
    j["asserted"] = report.asserted;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

std::string css_json(const CssReport& report) {
    Json j;
    j["n_max"] = report.n_max;
    j["graphs_checked"] = report.graphs_checked.str();
    j["violations"] = report.violations.str();
    j["max_ratio_beta"] = report.max_ratio_beta;
    j["max_ratio_gamma"] = report.max_ratio_gamma;
    j["witness"] = report.witness_text;
    j["pass"] = report.pass;
    return j.dump(2) + "\n";
}

}  // namespace tdl
