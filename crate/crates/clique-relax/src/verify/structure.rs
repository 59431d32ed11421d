//! Structural audits of produced instances: role cardinalities, per-role
//! degrees, degeneracy and bipartiteness bounds, and the target-size
//! arithmetic, all recounted from the role labels and the source graph.

use crate::reductions::{ReductionArtifact, ReductionKind, Role};

use super::ClaimReport;

pub fn check_structure(artifact: &ReductionArtifact) -> Vec<ClaimReport> {
    if artifact.is_trivial() {
        return vec![];
    }
    let mut reports = vec![check_role_counts(artifact)];
    if let Some(r) = check_degeneracy_bound(artifact) {
        reports.push(r);
    }
    if artifact.kind == ReductionKind::ClubOdd {
        reports.push(check_bipartite(artifact));
    }
    reports.push(check_role_degrees(artifact));
    if let Some(r) = check_kprime_identity(artifact) {
        reports.push(r);
    }
    if artifact.kind == ReductionKind::GcsEll {
        reports.push(check_yellow_purple_cover(artifact));
    }
    reports.push(check_kprime_audit(artifact));
    reports
}

fn counts(artifact: &ReductionArtifact) -> (usize, usize, usize, usize, usize) {
    (
        artifact.role_count(Role::Blue),
        artifact.role_count(Role::Red),
        artifact.role_count(Role::Green),
        artifact.role_count(Role::Purple),
        artifact.role_count(Role::Yellow),
    )
}

fn check_role_counts(artifact: &ReductionArtifact) -> ClaimReport {
    let claim = "structure.role-counts";
    let (blues, reds, greens, purples, yellows) = counts(artifact);
    let k = artifact.source_k;
    let m = artifact.source.m();
    let expected = match artifact.kind {
        ReductionKind::ClubOdd => {
            let s = artifact.params.s.unwrap();
            let nb = artifact.source.n() - artifact.dropped_isolated.len();
            (nb, (s - 2) * m, 0, 0, 1)
        }
        ReductionKind::ClubEven => {
            let s = artifact.params.s.unwrap();
            let nb = artifact.source.n() - artifact.dropped_isolated.len();
            let r = (s - 2) * m;
            let same_edge_pairs = m * ((s - 2) * (s - 3) / 2);
            let cross_pairs = r * (r - 1) / 2 - same_edge_pairs;
            (nb, r, (s - 2) * cross_pairs, 0, 1)
        }
        ReductionKind::GcsDegeneracy => {
            let p = artifact.params.yellow_count.unwrap();
            (artifact.source.n(), m, 0, k - 3, p)
        }
        ReductionKind::GcsEll => {
            let n_yellow = artifact.params.yellow_count.unwrap();
            (artifact.source.n(), artifact.source.m_bar(), 0, k + 1, n_yellow)
        }
    };
    let actual = (blues, reds, greens, purples, yellows);
    if actual == expected {
        ClaimReport::pass(claim, format!("roles (b,r,g,p,y) = {actual:?}"))
    } else {
        ClaimReport::fail(
            claim,
            format!("expected {expected:?}, found {actual:?}"),
            "role cardinalities must match the construction exactly",
        )
    }
}

fn check_degeneracy_bound(artifact: &ReductionArtifact) -> Option<ClaimReport> {
    let claim = "structure.degeneracy-bound";
    let bound = match artifact.kind {
        ReductionKind::ClubOdd => {
            if artifact.params.s.unwrap() >= 5 {
                2
            } else {
                3
            }
        }
        ReductionKind::ClubEven => {
            if artifact.params.s.unwrap() >= 6 {
                2
            } else {
                3
            }
        }
        ReductionKind::GcsDegeneracy => artifact.params.degree_threshold.unwrap() as usize,
        ReductionKind::GcsEll => return None,
    };
    let elim = artifact.gprime.degeneracy_order();
    let certified = elim.certifies(&artifact.gprime);
    Some(if elim.bound <= bound && certified {
        ClaimReport::pass(
            claim,
            format!("degeneracy {} <= {bound}, order certified", elim.bound),
        )
    } else {
        ClaimReport::fail(
            claim,
            format!("degeneracy {} (certified: {certified})", elim.bound),
            format!("bound {bound} required"),
        )
    })
}

fn check_bipartite(artifact: &ReductionArtifact) -> ClaimReport {
    let claim = "structure.bipartite";
    if artifact.gprime.is_bipartite() {
        ClaimReport::pass(claim, "no odd cycle")
    } else {
        ClaimReport::fail(claim, "odd cycle present", "odd-distance gadget must be bipartite")
    }
}

fn check_role_degrees(artifact: &ReductionArtifact) -> ClaimReport {
    let claim = "structure.role-degrees";
    let g = &artifact.gprime;
    let m = artifact.source.m();
    let mut fail: Option<String> = None;
    let mut record = |cond: bool, msg: String| {
        if !cond && fail.is_none() {
            fail = Some(msg);
        }
    };

    match artifact.kind {
        ReductionKind::ClubOdd => {
            let hub = artifact.vertices_with_role(Role::Yellow)[0];
            record(g.degree(hub) == m, format!("hub degree {} != m {m}", g.degree(hub)));
            let mut middles = 0;
            for red in artifact.vertices_with_role(Role::Red) {
                match g.degree(red) {
                    3 => middles += 1,
                    2 => {}
                    d => record(false, format!("red {red} degree {d}")),
                }
            }
            record(middles == m, format!("{middles} reds of degree 3, expected {m}"));
            for blue in artifact.vertices_with_role(Role::Blue) {
                let src_deg = artifact.source.degree(artifact.blue_map[blue]);
                record(
                    g.degree(blue) == src_deg,
                    format!("blue {blue} degree {} != source degree {src_deg}", g.degree(blue)),
                );
            }
        }
        ReductionKind::ClubEven => {
            let s = artifact.params.s.unwrap();
            let greens = artifact.role_count(Role::Green);
            let paths = greens / (s - 2);
            let hub = artifact.vertices_with_role(Role::Yellow)[0];
            record(
                g.degree(hub) == 2 * paths,
                format!("hub degree {} != 2*paths {}", g.degree(hub), 2 * paths),
            );
            let expected_red = 2 + (s - 2) * (m - 1);
            for red in artifact.vertices_with_role(Role::Red) {
                record(
                    g.degree(red) == expected_red,
                    format!("red {red} degree {} != {expected_red}", g.degree(red)),
                );
            }
            let mut hub_greens = 0;
            for green in artifact.vertices_with_role(Role::Green) {
                match g.degree(green) {
                    3 => hub_greens += 1,
                    2 => {}
                    d => record(false, format!("green {green} degree {d}")),
                }
            }
            record(
                hub_greens == 2 * paths,
                format!("{hub_greens} greens of degree 3, expected {}", 2 * paths),
            );
            for blue in artifact.vertices_with_role(Role::Blue) {
                let src_deg = artifact.source.degree(artifact.blue_map[blue]);
                record(
                    g.degree(blue) == src_deg,
                    format!("blue {blue} degree {} != source degree {src_deg}", g.degree(blue)),
                );
            }
        }
        ReductionKind::GcsDegeneracy => {
            let d_gamma = artifact.params.degree_threshold.unwrap() as usize;
            let p = artifact.params.yellow_count.unwrap();
            let k = artifact.source_k;
            for red in artifact.vertices_with_role(Role::Red) {
                record(
                    g.degree(red) == d_gamma,
                    format!("red {red} degree {} != threshold {d_gamma}", g.degree(red)),
                );
            }
            for blue in artifact.vertices_with_role(Role::Blue) {
                let want = artifact.source.degree(artifact.blue_map[blue]) + p;
                record(
                    g.degree(blue) == want,
                    format!("blue {blue} degree {} != {want}", g.degree(blue)),
                );
            }
            for purple in artifact.vertices_with_role(Role::Purple) {
                let want = m + p + k - 4;
                record(
                    g.degree(purple) == want,
                    format!("purple {purple} degree {} != {want}", g.degree(purple)),
                );
            }
            for yellow in artifact.vertices_with_role(Role::Yellow) {
                record(
                    g.degree(yellow) == g.n() - 1,
                    format!("yellow {yellow} is not universal"),
                );
            }
        }
        ReductionKind::GcsEll => {
            let d_gamma = artifact.params.degree_threshold.unwrap() as usize;
            let n_yellow = artifact.params.yellow_count.unwrap();
            for purple in artifact.vertices_with_role(Role::Purple) {
                record(
                    g.degree(purple) == d_gamma,
                    format!("purple {purple} degree {} != threshold {d_gamma}", g.degree(purple)),
                );
            }
            for red in artifact.vertices_with_role(Role::Red) {
                record(
                    g.degree(red) == d_gamma + 1,
                    format!("red {red} degree {} != threshold+1 {}", g.degree(red), d_gamma + 1),
                );
            }
            for blue in artifact.vertices_with_role(Role::Blue) {
                let want = artifact.source.n() - 1 + n_yellow;
                record(
                    g.degree(blue) == want,
                    format!("blue {blue} degree {} != {want}", g.degree(blue)),
                );
            }
        }
    }
    match fail {
        None => ClaimReport::pass(claim, "every role carries its prescribed degree"),
        Some(ce) => ClaimReport::fail(claim, ce, "per-role degree values"),
    }
}

/// For the degeneracy gadget the tight threshold satisfies
/// `d * b == a * (kprime - 1)` exactly; for the deletion gadget it is the
/// ceiling `d == ceil(a * (kprime - 1) / b)`.
fn check_kprime_identity(artifact: &ReductionArtifact) -> Option<ClaimReport> {
    let claim = "structure.kprime-identity";
    let gamma = artifact.params.gamma?;
    let d_gamma = artifact.params.degree_threshold?;
    let kp1 = (artifact.kprime - 1) as u64;
    let (ok, shown) = match artifact.kind {
        ReductionKind::GcsDegeneracy => (
            d_gamma * gamma.den() == gamma.num() * kp1,
            format!("{d_gamma}*{} == {}*{kp1}", gamma.den(), gamma.num()),
        ),
        ReductionKind::GcsEll => (
            d_gamma == gamma.ceil_mul(kp1),
            format!("{d_gamma} == ceil({}*{kp1}/{})", gamma.num(), gamma.den()),
        ),
        _ => return None,
    };
    Some(if ok {
        ClaimReport::pass(claim, shown)
    } else {
        ClaimReport::fail(claim, shown, "threshold / target-size identity")
    })
}

fn check_yellow_purple_cover(artifact: &ReductionArtifact) -> ClaimReport {
    let claim = "structure.yellow-purple-cover";
    for yellow in artifact.vertices_with_role(Role::Yellow) {
        let covered = artifact
            .gprime
            .neighbors(yellow)
            .iter()
            .any(|&w| artifact.roles[w] == Role::Purple);
        if !covered {
            return ClaimReport::fail(
                claim,
                format!("yellow {yellow} has no purple neighbor"),
                "every yellow needs a purple neighbor",
            );
        }
    }
    ClaimReport::pass(claim, "every yellow has a purple neighbor")
}

/// Recounts the target size from the role labels and compares it with both
/// the recorded `kprime` and the closed form. Only the even club gadget may
/// differ from its closed form, and then by exactly `(s-2) * m * C(s-2, 2)`.
fn check_kprime_audit(artifact: &ReductionArtifact) -> ClaimReport {
    let claim = "structure.kprime-audit";
    let (_, reds, greens, purples, yellows) = counts(artifact);
    let k = artifact.source_k;
    let recounted = match artifact.kind {
        ReductionKind::ClubOdd => k + reds + yellows,
        ReductionKind::ClubEven => k + reds + greens + yellows,
        ReductionKind::GcsDegeneracy => k + k * (k - 1) / 2 + purples + yellows,
        ReductionKind::GcsEll => yellows + artifact.role_count(Role::Blue) + reds + 1,
    };
    if recounted != artifact.kprime {
        return ClaimReport::fail(
            claim,
            format!("recounted {recounted} != kprime {}", artifact.kprime),
            "kprime must equal the actual construction cardinalities",
        );
    }
    let gap = artifact.kprime_closed_form as i64 - artifact.kprime as i64;
    let expected_gap = match artifact.kind {
        ReductionKind::ClubEven => {
            let s = artifact.params.s.unwrap();
            ((s - 2) * artifact.source.m() * ((s - 2) * (s - 3) / 2)) as i64
        }
        _ => 0,
    };
    if gap == expected_gap {
        ClaimReport::pass(
            claim,
            format!("kprime {} (closed form gap {gap})", artifact.kprime),
        )
    } else {
        ClaimReport::fail(
            claim,
            format!("closed-form gap {gap}, expected {expected_gap}"),
            "closed-form target size must overshoot by the same-edge pair count only",
        )
    }
}
