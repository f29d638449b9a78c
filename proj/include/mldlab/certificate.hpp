#pragma once

// One-stop verification driver: builds a family member, runs every identity
// and bound check, and bundles the outcomes for reporting. Nothing here
// throws on a failed mathematical check — failures land in the reports so a
// caller can render them; only malformed inputs (n < 2) or internal
// arithmetic bugs raise.

#include <functional>
#include <optional>

#include "alpha.hpp"
#include "family.hpp"
#include "mld.hpp"
#include "newton.hpp"

namespace mldlab {

struct CertificateOptions {
    bool brute_force = false;       // run the full group scan when affordable
    Int budget = Int(10'000'000);   // largest group order the scan may attempt
    Int away_work_limit = Int(1) << 31;
    ScanOptions scan;               // workers / arithmetic / progress
};

struct FamilyCertificate {
    FamilyMember member;

    CheckReport degree_identities;
    CheckReport weight_coprimality;
    CheckReport quasismooth_pattern;
    CheckReport mld_form;
    CheckReport witness;  // one-point evaluation at j_0 equals the closed form

    Rat closed_form;
    Rat sylvester_form;
    Int witness_j;
    MldResult witness_result;

    std::optional<MldResult> brute_force;  // present only when actually run
    bool brute_force_matches = true;

    std::optional<AwayFromPointReport> away;  // absent when gated by work limit

    AlphaBounds alpha;
    bool tangent_cone_klt_ok = false;
    NewtonSlackCertificate cone_slack;
    CheckReport exceptional;

    Rat fermat_threshold;

    bool all_ok() const {
        bool ok = degree_identities.ok() && weight_coprimality.ok() &&
                  quasismooth_pattern.ok() && mld_form.ok() && witness.ok() &&
                  tangent_cone_klt_ok && exceptional.ok() && brute_force_matches;
        if (away) ok = ok && away->checks.ok();
        return ok;
    }
};

inline FamilyCertificate run_certificate(int n, const CertificateOptions& opts = {}) {
    FamilyCertificate cert;
    cert.member = build_family(n);
    const FamilyMember& F = cert.member;

    cert.degree_identities = verify_degree_identities(F);
    cert.weight_coprimality = verify_weight_coprimality(F);
    cert.quasismooth_pattern = verify_quasismooth_pattern(F);
    cert.mld_form = verify_mld_sylvester_form(F);

    cert.closed_form = closed_form_mld(F);
    cert.sylvester_form = sylvester_form_mld(F);
    cert.witness_j = witness_index(F);

    cert.witness_result = mld_nonquasismooth(F, std::nullopt, opts.scan);
    cert.witness.expect(cert.witness_result.value.has_value() &&
                            *cert.witness_result.value == cert.closed_form,
                        "witness value at j_0 disagrees with the closed form");
    cert.witness.expect(cert.witness_result.classification == SingularityClass::Klt,
                        "witness point is not klt");

    if (opts.brute_force && F.a[static_cast<std::size_t>(F.n) + 1] <= opts.budget) {
        MldResult full = mld_nonquasismooth(F, opts.budget, opts.scan);
        cert.brute_force_matches =
            full.value.has_value() && *full.value == cert.closed_form &&
            full.classification == SingularityClass::Klt && full.witness.has_value() &&
            !full.witness->is_basis() && full.witness->group_index() == cert.witness_j;
        cert.brute_force = std::move(full);
    }

    cert.away = verify_mld_away_from_point(F, opts.away_work_limit, opts.scan);

    cert.alpha = alpha_bounds(F);
    cert.cone_slack = newton_interior_slack(tangent_cone(F).cone);
    cert.tangent_cone_klt_ok = cert.cone_slack.slack > 0;
    cert.exceptional = verify_exceptional(F);
    cert.fermat_threshold = fermat_lct(F);

    return cert;
}

}  // namespace mldlab
