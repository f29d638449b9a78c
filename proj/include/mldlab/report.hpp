#pragma once

// Rendering layer for the CLI: every command's results pass through the
// ordered-JSON builders below (field order is part of the output contract),
// or through the CSV / TeX renderers. Integers are always decimal strings
// and rationals always "p/q" in lowest terms, so reports are byte-stable
// across platforms; the timing block is the one exception callers may vary.

#include <json.hpp>

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "alpha.hpp"
#include "certificate.hpp"
#include "family.hpp"
#include "mld.hpp"
#include "polynomial.hpp"

namespace mldlab::report {

using json = nlohmann::ordered_json;

inline json jint(const Int& v) { return int_str(v); }
inline json jrat(const Rat& v) { return rat_str(v); }

inline json jint_list(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(jint(x));
    return a;
}

inline json jrat_list(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(jrat(x));
    return a;
}

inline json check_json(const CheckReport& rep) {
    json j;
    j["ok"] = rep.ok();
    j["failures"] = rep.failures;
    return j;
}

inline json equation_json(const WeightedPolynomial& p) {
    json rows = json::array();
    for (const Monomial& m : p.monomials) {
        std::ostringstream os;
        for (std::size_t i = 0; i < m.exponents.size(); ++i) {
            if (i) os << ' ';
            os << m.exponents[i];
        }
        rows.push_back(os.str());
    }
    return rows;
}

inline json pretty_monomials_json(const WeightedPolynomial& p) {
    json rows = json::array();
    for (const Monomial& m : p.monomials) rows.push_back(monomial_name(m));
    return rows;
}

inline json witness_json(const LatticePoint& pt) {
    json j;
    if (pt.is_basis()) {
        j["source"] = "basis";
        j["index"] = std::to_string(pt.basis_index());
    } else {
        j["source"] = "group";
        j["j"] = jint(pt.group_index());
    }
    j["coordinates"] = jrat_list(pt.coordinates);
    return j;
}

inline json mld_result_json(const MldResult& res) {
    json j;
    j["value"] = res.value ? jrat(*res.value) : json("NEGATIVE_INFINITY");
    j["classification"] = to_string(res.classification);
    j["witness"] = res.witness ? witness_json(*res.witness) : json(nullptr);
    return j;
}

inline json member_json(const FamilyMember& F) {
    json j;
    j["n"] = std::to_string(F.n);
    j["parity"] = F.even ? "even" : "odd";
    j["s_n"] = jint(F.s);
    j["weights"] = jint_list(F.a);
    j["d"] = jint(F.d);
    j["b"] = jint(F.b);
    j["c"] = jint(F.c);
    j["r"] = jint(F.r);
    j["equation"] = equation_json(F.equation);
    j["equation_pretty"] = pretty_monomials_json(F.equation);
    j["mld"] = jrat(closed_form_mld(F));
    j["mld_sylvester_form"] = jrat(sylvester_form_mld(F));
    j["witness_index"] = jint(witness_index(F));
    return j;
}

inline json alpha_json(const AlphaBounds& ab) {
    json j;
    j["ambient_mult_bound"] = jrat(ab.ambient_mult_bound);
    j["cone_degree_bound"] = jrat(ab.cone_degree_bound);
    j["cone_mult_bound"] = jrat(ab.cone_mult_bound);
    j["cone_point_bound"] = jrat(ab.cone_point_bound);
    j["lower"] = jrat(ab.lower);
    j["upper"] = jrat(ab.upper);
    j["note"] = "upper is the generic-member bound; sharper values may hold for small n";
    return j;
}

inline json slack_json(const NewtonSlackCertificate& cert) {
    json j;
    j["slack"] = jrat(cert.slack);
    json comb = json::array();
    for (const SlackTerm& t : cert.combination) {
        json e;
        e["monomial"] = std::to_string(t.monomial);
        e["lambda"] = jrat(t.lambda);
        comb.push_back(e);
    }
    j["combination"] = comb;
    return j;
}

inline json quasismooth_json(const WeightedPolynomial& p) {
    json rows = json::array();
    for (CoordinatePointStatus st : quasismooth_report(p)) rows.push_back(to_string(st));
    return rows;
}

inline json away_json(const AwayFromPointReport& rep) {
    json j;
    j["ok"] = rep.checks.ok();
    j["failures"] = rep.checks.failures;
    j["coordinate_quotient_mld"] = jrat(rep.coordinate_quotient_mld);
    json strata = json::array();
    for (const WeightStratum& st : rep.strata) {
        json e;
        e["i1"] = std::to_string(st.i1);
        e["i2"] = std::to_string(st.i2);
        e["g"] = jint(st.g);
        e["m"] = jint(st.m);
        strata.push_back(e);
    }
    j["strata"] = strata;
    return j;
}

inline json certificate_json(const FamilyCertificate& cert) {
    json j;
    j["member"] = member_json(cert.member);
    j["coordinate_points"] = quasismooth_json(cert.member.equation);
    json checks;
    checks["degree_identities"] = check_json(cert.degree_identities);
    checks["weight_coprimality"] = check_json(cert.weight_coprimality);
    checks["quasismooth_pattern"] = check_json(cert.quasismooth_pattern);
    checks["mld_sylvester_form"] = check_json(cert.mld_form);
    checks["witness_value"] = check_json(cert.witness);
    checks["exceptional"] = check_json(cert.exceptional);
    j["checks"] = checks;
    j["mld"] = jrat(cert.closed_form);
    j["mld_sylvester_form"] = jrat(cert.sylvester_form);
    json w;
    w["j"] = jint(cert.witness_j);
    w["result"] = mld_result_json(cert.witness_result);
    j["witness"] = w;
    if (cert.brute_force) {
        json bf;
        bf["result"] = mld_result_json(*cert.brute_force);
        bf["matches_closed_form"] = cert.brute_force_matches;
        j["brute_force"] = bf;
    } else {
        j["brute_force"] = nullptr;
    }
    j["away_from_point"] = cert.away ? away_json(*cert.away) : json(nullptr);
    json tc;
    tc["klt"] = cert.tangent_cone_klt_ok;
    tc["slack"] = slack_json(cert.cone_slack);
    j["tangent_cone"] = tc;
    j["alpha"] = alpha_json(cert.alpha);
    j["fermat_lct"] = jrat(cert.fermat_threshold);
    j["all_ok"] = cert.all_ok();
    return j;
}

inline json wrap(const std::string& command, json inputs, json results, long long total_ms) {
    json j;
    j["schema_version"] = "1";
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = std::move(results);
    j["timing"] = json{{"total_ms", std::to_string(total_ms)}};
    return j;
}

// --- flat renderers ---------------------------------------------------------

// Two-column CSV of scalar fields, in insertion order; nested objects and
// arrays are skipped except for a few flattened by the callers.
inline void csv_kv(std::ostringstream& os, const std::string& key, const json& v) {
    os << key << ',';
    if (v.is_string())
        os << v.get<std::string>();
    else if (v.is_boolean())
        os << (v.get<bool>() ? "true" : "false");
    else
        os << v.dump();
    os << '\n';
}

inline std::string csv_flat(const json& results) {
    std::ostringstream os;
    os << "field,value\n";
    const std::function<void(const json&, const std::string&)> walk =
        [&](const json& node, const std::string& prefix) {
            for (auto it = node.begin(); it != node.end(); ++it) {
                const std::string key = prefix.empty() ? it.key() : prefix + '.' + it.key();
                if (it->is_object())
                    walk(*it, key);
                else if (it->is_array()) {
                    bool scalar = true;
                    for (const json& e : *it)
                        if (!e.is_string()) scalar = false;
                    if (scalar && !it->empty()) {
                        std::string joined;
                        for (const json& e : *it) {
                            if (!joined.empty()) joined += ';';
                            joined += e.get<std::string>();
                        }
                        csv_kv(os, key, json(joined));
                    }
                } else if (!it->is_null())
                    csv_kv(os, key, *it);
            }
        };
    walk(results, "");
    return os.str();
}

inline std::string tex_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '_' || ch == '#' || ch == '%' || ch == '&') out += '\\';
        out += ch;
    }
    return out;
}

// Key/value tabular for single-object reports.
inline std::string tex_flat(const json& results) {
    std::ostringstream os;
    os << "\\begin{tabular}{ll}\n";
    for (auto it = results.begin(); it != results.end(); ++it) {
        if (it->is_object() || it->is_array() || it->is_null()) continue;
        std::string val;
        if (it->is_string())
            val = it->get<std::string>();
        else if (it->is_boolean())
            val = it->get<bool>() ? "true" : "false";
        else
            val = it->dump();
        os << tex_escape(it.key()) << " & $" << tex_escape(val) << "$ \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

// --- table command ----------------------------------------------------------

struct TableRow {
    int n;
    std::vector<Int> weights;
    Int d;
    Rat mld;
    Rat mld_sylvester_form;
    Rat alpha_lower;
    Rat alpha_upper;
    bool certificates_ok;
    bool certificates_checked;
};

inline constexpr std::size_t kWeightElisionThreshold = 64;  // joined decimal length

inline std::string joined_weights(const std::vector<Int>& w) {
    std::string joined;
    for (const Int& x : w) {
        if (!joined.empty()) joined += ' ';
        joined += int_str(x);
    }
    return joined;
}

inline json table_json(const std::vector<TableRow>& rows) {
    json out = json::array();
    for (const TableRow& row : rows) {
        json j;
        j["n"] = std::to_string(row.n);
        const std::string w = joined_weights(row.weights);
        if (w.size() <= kWeightElisionThreshold)
            j["weights"] = jint_list(row.weights);
        else
            j["weights"] = "(elided)";
        j["d"] = jint(row.d);
        j["mld"] = jrat(row.mld);
        j["mld_sylvester_form"] = jrat(row.mld_sylvester_form);
        j["alpha_lower"] = jrat(row.alpha_lower);
        j["alpha_upper"] = jrat(row.alpha_upper);
        j["certificates"] = row.certificates_checked ? (row.certificates_ok ? "pass" : "FAIL")
                                                     : "not_checked";
        out.push_back(j);
    }
    return out;
}

inline std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "n,weights,d,mld,mld_sylvester_form,alpha_lower,alpha_upper,certificates\n";
    for (const TableRow& row : rows) {
        const std::string w = joined_weights(row.weights);
        os << row.n << ',' << (w.size() <= kWeightElisionThreshold ? w : "(elided)") << ','
           << row.d << ',' << rat_str(row.mld) << ',' << rat_str(row.mld_sylvester_form) << ','
           << rat_str(row.alpha_lower) << ',' << rat_str(row.alpha_upper) << ','
           << (row.certificates_checked ? (row.certificates_ok ? "pass" : "FAIL")
                                        : "not_checked")
           << '\n';
    }
    return os.str();
}

inline std::string table_tex(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "\\begin{tabular}{rrlll}\n"
       << "$n$ & $d$ & mld & $\\alpha$ lower & $\\alpha$ upper \\\\\n\\hline\n";
    for (const TableRow& row : rows) {
        os << row.n << " & $" << row.d << "$ & $" << rat_str(row.mld) << "$ & $"
           << rat_str(row.alpha_lower) << "$ & $" << rat_str(row.alpha_upper) << "$ \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace mldlab::report
