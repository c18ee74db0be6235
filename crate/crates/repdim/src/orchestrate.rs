//! Top-level verification runs: build the generator-cogenerator M_n (closed
//! form and inductive recipe), resolve every simple, compare against the
//! expected tables, check the Λ_n lift, produce infinite-type witnesses, and
//! assemble the machine-readable certificate.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{regular_module, MonomialAlgebra};
use crate::approx::{
    check_generator_cogenerator, global_dimension, HomTable, Resolution, Summand, SummandSet,
};
use crate::diagram::Diagram;
use crate::error::Error;
use crate::field::Field;
use crate::fixtures::{compare, FixtureComparison, FixtureOutcome};
use crate::hom::{find_isomorphism, is_indecomposable, IsoResult};
use crate::label::Label;
use crate::module::{
    a_diagram, da_diagram, regular_diagram, u_diagram, x_diagram, zigzag_module, Module,
};

// ---------------------------------------------------------------------------
// certificate schema (field names frozen, v1)
// ---------------------------------------------------------------------------

#[derive(Serialize, Clone, Debug)]
pub struct AlgebraInfo {
    pub kind: String,
    pub n: u32,
    pub field: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct SummandInfo {
    pub label: Label,
    pub dim: usize,
}

#[derive(Serialize, Clone, Debug)]
pub struct ResolutionInfo {
    pub target: Label,
    pub pd: usize,
    pub terms: Vec<Vec<Label>>,
}

#[derive(Serialize, Clone, Debug)]
pub struct GenCogenCheck {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub projective: Option<Label>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injective: Option<Label>,
    pub self_injective: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct FixtureCheck {
    pub passed: bool,
    pub matched: usize,
    pub warnings: Vec<FixtureComparison>,
    pub failures: Vec<FixtureComparison>,
}

#[derive(Serialize, Clone, Debug)]
pub struct RecipeStage {
    pub n: u32,
    pub removed: Vec<Label>,
    pub added: Vec<Label>,
    pub kept: Vec<Label>,
    /// summands the closed form does not contain (must be 0)
    pub unmatched: usize,
    pub matches_formula: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct RecipeCheck {
    pub passed: bool,
    pub stages: Vec<RecipeStage>,
}

#[derive(Serialize, Clone, Debug)]
pub struct WitnessCheck {
    pub count: u32,
    pub dims: Vec<usize>,
    pub all_indecomposable: bool,
}

#[derive(Serialize, Clone, Debug)]
pub struct Checks {
    pub gen_cogen: GenCogenCheck,
    pub fixtures: Option<FixtureCheck>,
    pub recipe_diff: Option<RecipeCheck>,
    pub witnesses: WitnessCheck,
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    #[serde(rename = "theorem-checked")]
    TheoremChecked,
    #[serde(rename = "failed")]
    Failed,
}

/// The machine-readable record of one verification run. Byte-identical
/// across runs with the same flags: all orders are canonical and the
/// runtime_ms field is pinned to 0 (measured wall-clock goes to the
/// informational output channel instead).
#[derive(Serialize, Clone, Debug)]
pub struct VerificationCertificate {
    pub algebra: AlgebraInfo,
    pub summands: Vec<SummandInfo>,
    pub resolutions: Vec<ResolutionInfo>,
    pub global_dimension: usize,
    pub checks: Checks,
    pub verdict: Verdict,
    pub seed: u64,
    pub runtime_ms: u64,
}

impl VerificationCertificate {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }
}

/// A verification run: the certificate plus the full engine objects for
/// callers that want to inspect the per-step soundness flags.
pub struct VerifyRun<K: Field> {
    pub certificate: VerificationCertificate,
    pub set: SummandSet<K>,
    pub resolutions: Vec<Resolution<K>>,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub cap: usize,
    pub seed: u64,
    pub witness_count: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cap: 10,
            seed: 0,
            witness_count: 10,
        }
    }
}

// ---------------------------------------------------------------------------
// building M_n
// ---------------------------------------------------------------------------

fn diagram_of(label: Label) -> Diagram {
    match label {
        Label::A(i, j) => a_diagram(i, j),
        Label::DA(i, j) => da_diagram(i, j),
        Label::U(i) => u_diagram(i),
        Label::X => x_diagram(),
        Label::Lambda => unreachable!("Lambda summands are built from the algebra"),
    }
}

/// The generator-cogenerator M_n from its closed form: all DA_i^j (i+j ≤ n),
/// the A_i^j with j > 0, the projective A_n^0, the uniserials U_0..U_{n+1}
/// and X. Uncertified; call [`SummandSet::certify`].
pub fn build_mn<K: Field>(n: u32, field: K) -> Result<SummandSet<K>, Error> {
    let alg = MonomialAlgebra::an(n);
    let mut summands = Vec::new();
    for label in crate::fixtures::mn_labels(n) {
        let diagram = diagram_of(label);
        let module = Module::from_diagram(&diagram, &alg, field.clone())?;
        summands.push(Summand {
            label,
            module,
            diagram: Some(diagram),
        });
    }
    Ok(SummandSet::new(alg, summands))
}

/// Result of the inductive construction M_0 → M_1 → … → M_n.
pub struct RecipeResult<K: Field> {
    pub stages: Vec<RecipeStage>,
    pub passed: bool,
    /// the final set, labeled by matching against the closed form; `None`
    /// when some stage failed to match
    pub set: Option<SummandSet<K>>,
}

/// Build M_n from M_{n-1} by the combinatorial recipe: extend every summand
/// diagram by one vertex on top (no new squares), dedupe up to isomorphism,
/// drop the old projective, add the new projective and its dual. Each stage
/// is diffed against the closed form.
pub fn build_mn_by_recipe<K: Field>(n: u32, field: K, seed: u64) -> Result<RecipeResult<K>, Error> {
    if n < 1 {
        return Err(Error::InvalidInput(
            "the recipe starts at n = 1".to_string(),
        ));
    }
    // stage 0: M_0 diagrams with their known labels
    let mut current: Vec<Diagram> = crate::fixtures::mn_labels(0)
        .into_iter()
        .map(diagram_of)
        .collect();
    let mut current_labels: Vec<Option<Label>> = crate::fixtures::mn_labels(0)
        .into_iter()
        .map(Some)
        .collect();
    let mut stages = Vec::new();
    let mut passed = true;
    let mut final_set = None;
    for k in 1..=n {
        let alg = MonomialAlgebra::an(k);
        // carry the previous summands over A_k
        let mut pool: Vec<(Diagram, Module<K>)> = Vec::new();
        for d in &current {
            let m = Module::from_diagram(d, &alg, field.clone())?;
            pool.push((d.clone(), m));
        }
        // all vertex-on-top extensions that satisfy the A_k relations,
        // deduped against the pool up to isomorphism
        let mut ext_idx = 0u64;
        let base_count = current.len();
        for di in 0..base_count {
            for ext in current[di].vertex_extensions() {
                let Ok(m) = Module::from_diagram(&ext, &alg, field.clone()) else {
                    continue;
                };
                ext_idx += 1;
                let mut duplicate = false;
                for (pos, (_, existing)) in pool.iter().enumerate() {
                    if existing.dim() != m.dim() {
                        continue;
                    }
                    let pair_seed = seed
                        .wrapping_add(k as u64 * 1_000_003)
                        .wrapping_add(ext_idx * 1009)
                        .wrapping_add(pos as u64);
                    match find_isomorphism(existing, &m, pair_seed)? {
                        IsoResult::Iso(_) => {
                            duplicate = true;
                            break;
                        }
                        IsoResult::NotIso(_) => {}
                    }
                }
                if !duplicate {
                    pool.push((ext, m));
                }
            }
        }
        // remove the old projective A_{k-1}^0
        let old_proj = Module::from_diagram(&a_diagram(k - 1, 0), &alg, field.clone())?;
        let mut removed_labels = Vec::new();
        let mut idx = 0;
        while idx < pool.len() {
            let matches_old = pool[idx].1.dim() == old_proj.dim()
                && matches!(
                    find_isomorphism(&pool[idx].1, &old_proj, seed.wrapping_add(idx as u64))?,
                    IsoResult::Iso(_)
                );
            if matches_old {
                if idx < current_labels.len() {
                    if let Some(l) = current_labels[idx] {
                        removed_labels.push(l);
                    }
                }
                pool.remove(idx);
            } else {
                idx += 1;
            }
        }
        // add the new projective and the new injective
        for d in [a_diagram(k, 0), da_diagram(k, 0)] {
            let m = Module::from_diagram(&d, &alg, field.clone())?;
            pool.push((d, m));
        }
        // match the pool against the closed form
        let formula = build_mn(k, field.clone())?;
        let mut matched: Vec<Option<Label>> = Vec::with_capacity(pool.len());
        for (pos, (_, m)) in pool.iter().enumerate() {
            let mut found = None;
            for s in &formula.summands {
                if s.module.dim() != m.dim() {
                    continue;
                }
                let pair_seed = seed
                    .wrapping_add(k as u64 * 7_000_003)
                    .wrapping_add(pos as u64 * 131);
                if let IsoResult::Iso(_) = find_isomorphism(m, &s.module, pair_seed)? {
                    found = Some(s.label);
                    break;
                }
            }
            matched.push(found);
        }
        let unmatched = matched.iter().filter(|m| m.is_none()).count();
        let prev_set: Vec<Label> = current_labels.iter().flatten().copied().collect();
        let now_set: Vec<Label> = matched.iter().flatten().copied().collect();
        let mut added: Vec<Label> = now_set
            .iter()
            .filter(|l| !prev_set.contains(l))
            .copied()
            .collect();
        let mut kept: Vec<Label> = now_set
            .iter()
            .filter(|l| prev_set.contains(l))
            .copied()
            .collect();
        added.sort();
        kept.sort();
        removed_labels.sort();
        let stage_pass = unmatched == 0 && now_set.len() == formula.len();
        if !stage_pass {
            passed = false;
        }
        stages.push(RecipeStage {
            n: k,
            removed: removed_labels,
            added,
            kept,
            unmatched,
            matches_formula: stage_pass,
        });
        // set up the next stage, sorted canonically when fully matched
        let mut indexed: Vec<(Option<Label>, Diagram)> = matched
            .iter()
            .copied()
            .zip(pool.into_iter().map(|(d, _)| d))
            .collect();
        if stage_pass {
            indexed.sort_by_key(|(l, _)| *l);
        }
        current_labels = indexed.iter().map(|(l, _)| *l).collect();
        current = indexed.into_iter().map(|(_, d)| d).collect();
        if k == n && stage_pass {
            let alg_n = MonomialAlgebra::an(n);
            let summands = current
                .iter()
                .zip(current_labels.iter())
                .map(|(d, l)| {
                    Ok(Summand {
                        label: l.expect("fully matched stage"),
                        module: Module::from_diagram(d, &alg_n, field.clone())?,
                        diagram: Some(d.clone()),
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            final_set = Some(SummandSet::new(alg_n, summands));
        }
    }
    Ok(RecipeResult {
        stages,
        passed,
        set: final_set,
    })
}

// ---------------------------------------------------------------------------
// witnesses and sanity runs
// ---------------------------------------------------------------------------

/// Certified indecomposables of strictly increasing dimension (dims 2, 4,
/// …, 2L): desk-scale evidence that the algebra is not representation
/// finite.
pub fn witness_infinite_type<K: Field>(
    alg: &Arc<MonomialAlgebra>,
    field: K,
    count: u32,
    seed: u64,
) -> Result<WitnessCheck, Error> {
    if count < 2 {
        return Err(Error::InvalidInput(
            "witness count must be at least 2".to_string(),
        ));
    }
    let mut dims = Vec::new();
    for len in 1..=count {
        let z = zigzag_module(len, alg, field.clone())?;
        let (ok, _) = is_indecomposable(&z, seed.wrapping_add(len as u64))?;
        if !ok {
            return Err(Error::Internal(format!(
                "zigzag of length {len} failed to certify"
            )));
        }
        dims.push(z.dim());
    }
    Ok(WitnessCheck {
        count,
        dims,
        all_indecomposable: true,
    })
}

#[derive(Serialize, Clone, Debug)]
pub struct AuslanderReport {
    pub m: u32,
    pub global_dimension: usize,
    pub checks_passed: bool,
}

/// Ground-truth validation on a representation-finite algebra: for k[y]/(y^m)
/// the summand set of all chains gives gl.dim End ≤ 2 (0 for m = 1).
pub fn auslander_sanity<K: Field>(
    m: u32,
    field: K,
    opts: &VerifyOptions,
) -> Result<AuslanderReport, Error> {
    if m < 1 {
        return Err(Error::InvalidInput(
            "chain length must be at least 1".to_string(),
        ));
    }
    let alg = MonomialAlgebra::uniserial(m);
    let summands = (0..m)
        .map(|i| {
            Ok(Summand {
                label: Label::U(i),
                module: crate::module::u_module(i, &alg, field.clone())?,
                diagram: Some(u_diagram(i)),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let mut set = SummandSet::new(Arc::clone(&alg), summands);
    set.certify(opts.seed)?;
    let table = HomTable::build(&set)?;
    let (gl, resolutions) = global_dimension(&set, &table, opts.cap)?;
    if gl > 2 {
        return Err(Error::Internal(format!(
            "gl.dim End of the chains over k[y]/(y^{m}) came out {gl} > 2"
        )));
    }
    let checks_passed = resolutions.iter().all(|r| r.checks.all_passed());
    Ok(AuslanderReport {
        m,
        global_dimension: gl,
        checks_passed,
    })
}

// ---------------------------------------------------------------------------
// full verification runs
// ---------------------------------------------------------------------------

fn gen_cogen_check<K: Field>(set: &SummandSet<K>, seed: u64) -> Result<GenCogenCheck, Error> {
    match check_generator_cogenerator(set, seed) {
        Ok(cert) => Ok(GenCogenCheck {
            passed: true,
            projective: Some(cert.projective),
            injective: Some(cert.injective),
            self_injective: cert.self_injective,
        }),
        Err(Error::MissingProjective(_)) => Ok(GenCogenCheck {
            passed: false,
            projective: None,
            injective: None,
            self_injective: false,
        }),
        Err(e) => Err(e),
    }
}

/// Run the full A_n verification on an already certified summand set. Used
/// by [`verify_an`] and by the negative-control tests.
pub fn verify_an_set<K: Field>(
    set: SummandSet<K>,
    n: u32,
    field: K,
    opts: &VerifyOptions,
    recipe: Option<RecipeCheck>,
) -> Result<VerifyRun<K>, Error> {
    if set.certification.is_none() {
        return Err(Error::InvalidInput(
            "summand set must be certified first".to_string(),
        ));
    }
    let gen_cogen = gen_cogen_check(&set, opts.seed)?;
    let table = HomTable::build(&set)?;
    let (gl, resolutions) = global_dimension(&set, &table, opts.cap)?;
    let mut matched = 0usize;
    let mut warnings = Vec::new();
    let mut failures = Vec::new();
    for r in &resolutions {
        let cmp = compare(n, r.target, &r.terms, r.pd);
        match cmp.outcome {
            FixtureOutcome::Match => matched += 1,
            FixtureOutcome::Warning => warnings.push(cmp),
            FixtureOutcome::Failure => failures.push(cmp),
        }
    }
    // partition check: the table covers the labels of M_n exactly once; a
    // verification that resolves fewer simples did not run on M_n
    for label in crate::fixtures::mn_labels(n) {
        if set.index_of(label).is_none() {
            failures.push(FixtureComparison {
                target: label,
                case: "missing-summand".to_string(),
                outcome: FixtureOutcome::Failure,
                computed: None,
            });
        }
    }
    let fixtures = FixtureCheck {
        passed: failures.is_empty(),
        matched,
        warnings,
        failures,
    };
    let witnesses =
        witness_infinite_type(&set.algebra, field.clone(), opts.witness_count, opts.seed)?;
    let sound = resolutions.iter().all(|r| r.checks.all_passed());
    let recipe_passed = recipe.as_ref().map_or(true, |r| r.passed);
    let verdict = if gen_cogen.passed
        && gl == 3
        && sound
        && fixtures.passed
        && recipe_passed
        && witnesses.all_indecomposable
    {
        Verdict::TheoremChecked
    } else {
        Verdict::Failed
    };
    let certificate = VerificationCertificate {
        algebra: AlgebraInfo {
            kind: "an".to_string(),
            n,
            field: field.name(),
        },
        summands: set
            .summands
            .iter()
            .map(|s| SummandInfo {
                label: s.label,
                dim: s.module.dim(),
            })
            .collect(),
        resolutions: resolutions
            .iter()
            .map(|r| ResolutionInfo {
                target: r.target,
                pd: r.pd,
                terms: r.terms.clone(),
            })
            .collect(),
        global_dimension: gl,
        checks: Checks {
            gen_cogen,
            fixtures: Some(fixtures),
            recipe_diff: recipe,
            witnesses,
        },
        verdict,
        seed: opts.seed,
        runtime_ms: 0,
    };
    Ok(VerifyRun {
        certificate,
        set,
        resolutions,
    })
}

/// Verify rep.dim A_n = 3: build M_n (both ways for n ≥ 1, diffed), certify
/// it, resolve all simples, compare with the expected tables, check
/// gl.dim End(M_n) = 3 exactly, and certify infinite-type witnesses.
pub fn verify_an<K: Field>(n: u32, field: K, opts: &VerifyOptions) -> Result<VerifyRun<K>, Error> {
    let mut set = build_mn(n, field.clone())?;
    set.certify(opts.seed)?;
    let recipe = if n >= 1 {
        let result = build_mn_by_recipe(n, field.clone(), opts.seed)?;
        Some(RecipeCheck {
            passed: result.passed,
            stages: result.stages,
        })
    } else {
        None
    };
    verify_an_set(set, n, field, opts, recipe)
}

/// Verify the Λ_n lift: N = inflate(M_n) ⊕ Λ_n is a generator-cogenerator
/// over the self-injective Λ_n and gl.dim End(N) ≤ 3.
pub fn verify_lambda<K: Field>(
    n: u32,
    field: K,
    opts: &VerifyOptions,
) -> Result<VerifyRun<K>, Error> {
    let an_set = build_mn(n, field.clone())?;
    let lambda = MonomialAlgebra::lambda(n);
    let mut summands = Vec::new();
    for s in &an_set.summands {
        summands.push(Summand {
            label: s.label,
            module: s.module.inflate(&lambda)?,
            diagram: s.diagram.clone(),
        });
    }
    summands.push(Summand {
        label: Label::Lambda,
        module: regular_module(&lambda, field.clone()),
        diagram: Some(regular_diagram(&lambda)),
    });
    let mut set = SummandSet::new(Arc::clone(&lambda), summands);
    set.certify(opts.seed)?;
    let gen_cogen = gen_cogen_check(&set, opts.seed)?;
    let table = HomTable::build(&set)?;
    let (gl, resolutions) = global_dimension(&set, &table, opts.cap)?;
    let witnesses = witness_infinite_type(&lambda, field.clone(), opts.witness_count, opts.seed)?;
    let sound = resolutions.iter().all(|r| r.checks.all_passed());
    let verdict = if gen_cogen.passed && gl <= 3 && sound && witnesses.all_indecomposable {
        Verdict::TheoremChecked
    } else {
        Verdict::Failed
    };
    let certificate = VerificationCertificate {
        algebra: AlgebraInfo {
            kind: "lambda".to_string(),
            n,
            field: field.name(),
        },
        summands: set
            .summands
            .iter()
            .map(|s| SummandInfo {
                label: s.label,
                dim: s.module.dim(),
            })
            .collect(),
        resolutions: resolutions
            .iter()
            .map(|r| ResolutionInfo {
                target: r.target,
                pd: r.pd,
                terms: r.terms.clone(),
            })
            .collect(),
        global_dimension: gl,
        checks: Checks {
            gen_cogen,
            fixtures: None,
            recipe_diff: None,
            witnesses,
        },
        verdict,
        seed: opts.seed,
        runtime_ms: 0,
    };
    Ok(VerifyRun {
        certificate,
        set,
        resolutions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::module::da_module;

    #[test]
    fn build_mn_counts() {
        for n in 0..=3u32 {
            let set = build_mn(n, Rationals).unwrap();
            assert_eq!(set.len() as u32, n * n + 3 * n + 5);
        }
        let m0 = build_mn(0, Rationals).unwrap();
        assert_eq!(
            m0.labels(),
            vec![
                Label::A(0, 0),
                Label::DA(0, 0),
                Label::U(0),
                Label::U(1),
                Label::X
            ]
        );
    }

    #[test]
    fn da00_extends_only_to_da01() {
        // the square-creating extension is rejected; the y-extension survives
        let alg = MonomialAlgebra::an(1);
        let base = da_diagram(0, 0);
        let valid: Vec<Module<Rationals>> = base
            .vertex_extensions()
            .iter()
            .filter_map(|d| Module::from_diagram(d, &alg, Rationals).ok())
            .collect();
        assert_eq!(valid.len(), 1);
        let da01 = da_module(0, 1, &alg, Rationals).unwrap();
        assert!(matches!(
            find_isomorphism(&valid[0], &da01, 0).unwrap(),
            IsoResult::Iso(_)
        ));
    }

    #[test]
    fn u_chain_extends_to_longer_chain() {
        let alg = MonomialAlgebra::an(2);
        let base = u_diagram(2);
        let target = crate::module::u_module(3, &alg, Rationals).unwrap();
        let found = base.vertex_extensions().iter().any(|d| {
            Module::from_diagram(d, &alg, Rationals)
                .ok()
                .map(|m| matches!(find_isomorphism(&m, &target, 0), Ok(IsoResult::Iso(_))))
                .unwrap_or(false)
        });
        assert!(found);
    }

    #[test]
    fn recipe_stage_one() {
        let result = build_mn_by_recipe(1, Rationals, 0).unwrap();
        assert!(result.passed, "stages: {:?}", result.stages);
        let stage = &result.stages[0];
        assert_eq!(stage.removed, vec![Label::A(0, 0)]);
        let mut expected_added = vec![
            Label::A(1, 0),
            Label::A(0, 1),
            Label::DA(1, 0),
            Label::DA(0, 1),
            Label::U(2),
        ];
        expected_added.sort();
        assert_eq!(stage.added, expected_added);
        assert_eq!(stage.unmatched, 0);
        let set = result.set.unwrap();
        assert_eq!(set.labels(), build_mn(1, Rationals).unwrap().labels());
    }

    #[test]
    fn witnesses() {
        let alg = MonomialAlgebra::an(0);
        let w = witness_infinite_type(&alg, Rationals, 5, 0).unwrap();
        assert_eq!(w.dims, vec![2, 4, 6, 8, 10]);
        assert!(w.all_indecomposable);
        assert!(matches!(
            witness_infinite_type(&alg, Rationals, 1, 0),
            Err(Error::InvalidInput(_))
        ));
        // the same zigzags stay valid over Λ_2
        let l2 = MonomialAlgebra::lambda(2);
        let w = witness_infinite_type(&l2, Rationals, 5, 0).unwrap();
        assert_eq!(w.dims, vec![2, 4, 6, 8, 10]);
    }

    #[test]
    fn auslander_small_cases() {
        let opts = VerifyOptions::default();
        let r = auslander_sanity(1, Rationals, &opts).unwrap();
        assert_eq!(r.global_dimension, 0);
        for m in 2..=4u32 {
            let r = auslander_sanity(m, Rationals, &opts).unwrap();
            assert!(r.global_dimension <= 2);
            assert!(r.checks_passed);
        }
        assert_eq!(
            auslander_sanity(4, Rationals, &opts)
                .unwrap()
                .global_dimension,
            2
        );
    }

    #[test]
    fn verify_an_n0() {
        let run = verify_an(0, Rationals, &VerifyOptions::default()).unwrap();
        let cert = &run.certificate;
        assert_eq!(cert.verdict, Verdict::TheoremChecked);
        assert_eq!(cert.global_dimension, 3);
        let fx = cert.checks.fixtures.as_ref().unwrap();
        assert!(fx.passed);
        assert_eq!(fx.matched, 5);
        assert!(fx.warnings.is_empty());
    }

    #[test]
    fn verify_an_n1_and_reproducibility() {
        let opts = VerifyOptions::default();
        let run1 = verify_an(1, Rationals, &opts).unwrap();
        assert_eq!(run1.certificate.verdict, Verdict::TheoremChecked);
        assert_eq!(run1.certificate.global_dimension, 3);
        let run2 = verify_an(1, Rationals, &opts).unwrap();
        assert_eq!(run1.certificate.to_json(), run2.certificate.to_json());
    }

    #[test]
    fn verify_lambda_n0() {
        let run = verify_lambda(0, Rationals, &VerifyOptions::default()).unwrap();
        let cert = &run.certificate;
        assert_eq!(cert.verdict, Verdict::TheoremChecked);
        assert!(cert.global_dimension <= 3);
        assert!(cert.checks.gen_cogen.self_injective);
        assert_eq!(cert.checks.gen_cogen.projective, Some(Label::Lambda));
    }

    #[test]
    fn negative_control_deleted_summand() {
        // M_1 without U[2]: gen-cogen still passes but the verification must
        // not come out theorem-checked
        let field = Rationals;
        let full = build_mn(1, field).unwrap();
        let mut set = SummandSet::new(
            Arc::clone(&full.algebra),
            full.summands
                .iter()
                .filter(|s| s.label != Label::U(2))
                .cloned()
                .collect(),
        );
        set.certify(0).unwrap();
        let opts = VerifyOptions::default();
        match verify_an_set(set, 1, field, &opts, None) {
            Ok(run) => {
                assert_eq!(run.certificate.verdict, Verdict::Failed);
                let fx = run.certificate.checks.fixtures.as_ref().unwrap();
                assert!(fx.failures.iter().any(|f| f.case == "missing-summand"));
            }
            Err(e) => {
                assert!(matches!(
                    e,
                    Error::CapExceeded { .. } | Error::UndecidedIsomorphism { .. }
                ));
            }
        }
    }
}
