use std::fmt::Display;

use serde_json::{json, Value};

use hga_core::deform::{
    ainf_bar, check_ainf, check_ainf_morphism, check_gauge, check_star, classify_morphism, gerstenhaber_report,
    intrinsic_formality, stasheff_to_twist, star_to_twist, AinfAlgebra,
};
use hga_core::f2::F2Vec;
use hga_core::graded::{bar, check_brown, cobar, universal_bar_cochain, universal_cobar_cochain, DgAlgebra};
use hga_core::hga::{
    build_bar_bialgebra, hochschild_window, verify_axioms, verify_lie, verify_low_dim, AxiomConfig, HochschildHga,
};
use hga_core::hochschild::{hochschild_cohomology, GradedAlgebra};
use hga_core::io::{CochainDoc, Document, InputError, LevelsDoc};
use hga_core::twist::{
    find_equivalence, quantization_obstruction, quantize, triviality_reduce, EquivalenceVerdict, ObstructionClass,
    QuantizeVerdict, TwistCarrier, TwistV1,
};

use crate::report::{Report, Status};
use crate::{Carrier, Command, Config, ObstructKind, Version};

type Outcome = Result<(Status, Value), InputError>;

pub fn run(cmd: &Command, cfg: &Config) -> Report {
    let name = cmd.name();
    match execute(cmd, cfg) {
        Ok((status, result)) => Report::new(name, cfg, status, result),
        Err(e) => {
            let msg = e.to_string();
            Report::input_error(name, cfg, json!(e), msg)
        }
    }
}

/// The loaded document and its file name for error locations.
struct Input {
    file: String,
    doc: Document,
}

fn err(file: &str, field: &str, message: impl Into<String>) -> InputError {
    InputError { file: file.to_string(), field: field.to_string(), message: message.into() }
}

fn at<'a, E: Display>(file: &'a str, field: &'a str) -> impl FnOnce(E) -> InputError + 'a {
    move |e| err(file, field, e.to_string())
}

impl Input {
    fn load(cfg: &Config) -> Result<Self, InputError> {
        let path = cfg.input.as_ref().ok_or_else(|| err("-", "--input", "required flag missing"))?;
        let doc = Document::load(path)?;
        Ok(Self { file: path.display().to_string(), doc })
    }

    fn need<'a, T>(&self, section: &'a Option<T>, name: &str) -> Result<&'a T, InputError> {
        section.as_ref().ok_or_else(|| err(&self.file, name, "required section missing"))
    }

    fn algebra(&self) -> Result<DgAlgebra, InputError> {
        self.need(&self.doc.algebra, "algebra")?.build(&self.file)
    }

    fn graded(&self) -> Result<GradedAlgebra, InputError> {
        GradedAlgebra::new(self.algebra()?).map_err(at(&self.file, "algebra"))
    }

    fn twist(&self, h: &GradedAlgebra, name: &str) -> Result<TwistV1, InputError> {
        let section = if name == "target" { &self.doc.target } else { &self.doc.twist };
        self.need(section, name)?.twist(&self.file, name, h)
    }

    fn ainf(&self, name: &str) -> Result<AinfAlgebra, InputError> {
        let section = if name == "ainf_target" { &self.doc.ainf_target } else { &self.doc.ainf };
        self.need(section, name)?.build(&self.file, name)
    }
}

fn bits(v: &F2Vec) -> String {
    (0..v.len()).map(|i| if v.get(i) { '1' } else { '0' }).collect()
}

fn obstruction_json(h: &GradedAlgebra, o: &ObstructionClass) -> Value {
    json!({
        "level": o.level,
        "bidegree": o.bidegree,
        "coordinates": bits(&o.coordinates),
        "vanishes": o.vanishes(),
        "cocycle": CochainDoc::from_cochain(h, &o.cocycle),
    })
}

fn execute(cmd: &Command, cfg: &Config) -> Outcome {
    let input = Input::load(cfg)?;
    let file = input.file.as_str();
    match cmd {
        Command::Validate => {
            input.doc.validate(file)?;
            let v = serde_json::to_value(&input.doc).expect("documents serialize");
            let sections: Vec<&String> = v.as_object().map(|o| o.keys().collect()).unwrap_or_default();
            Ok((Status::Verified, json!({ "valid": true, "sections": sections })))
        }
        Command::VerifyDga => {
            let a = input.algebra()?;
            let r = a.validate();
            Ok((Status::from_ok(r.is_valid()), json!({ "dim": a.dim(), "violations": r.violations })))
        }
        Command::VerifyDgc => {
            let c = input.need(&input.doc.coalgebra, "coalgebra")?.build(file)?;
            let r = c.validate();
            Ok((Status::from_ok(r.is_valid()), json!({ "dim": c.dim(), "violations": r.violations })))
        }
        Command::Bar { non_reduced } => {
            let a = input.algebra()?;
            let b = bar(&a, cfg.bar_l, *non_reduced).map_err(at(file, "algebra"))?;
            let dd = b.dd_failure().map(|w| b.word_name(w).to_string());
            let coalg = b.coalgebra().validate();
            let ok = dd.is_none() && coalg.is_valid();
            Ok((
                Status::from_ok(ok),
                json!({ "words": b.words().len(), "dd_failure": dd, "coalgebra_violations": coalg.violations }),
            ))
        }
        Command::Cobar => {
            let c = input.need(&input.doc.coalgebra, "coalgebra")?.build(file)?;
            let cb = cobar(&c, cfg.bar_l).map_err(at(file, "coalgebra"))?;
            let dd = cb.dd_failure().map(|w| cb.word_name(w).to_string());
            Ok((
                Status::from_ok(dd.is_none()),
                json!({ "words": cb.words().len(), "overflow": cb.overflow().len(), "dd_failure": dd }),
            ))
        }
        Command::VerifyBrown { non_reduced } => {
            if input.doc.algebra.is_none() && input.doc.coalgebra.is_none() {
                return Err(err(file, "algebra", "needs an `algebra` or a `coalgebra` section"));
            }
            let mut ok = true;
            let mut result = json!({});
            if input.doc.algebra.is_some() {
                let a = input.algebra()?;
                let b = bar(&a, cfg.bar_l, *non_reduced).map_err(at(file, "algebra"))?;
                let (src, tau) = universal_bar_cochain(&b, &a);
                let r = check_brown(&src, &a, &tau);
                ok &= r.holds;
                result["bar"] = json!(r);
            }
            if let Some(cd) = &input.doc.coalgebra {
                let c = cd.build(file)?;
                let cb = cobar(&c, cfg.bar_l).map_err(at(file, "coalgebra"))?;
                let (dst, tau) = universal_cobar_cochain(&c, &cb);
                let r = check_brown(&c, &dst, &tau);
                ok &= r.holds;
                result["cobar"] = json!(r);
            }
            Ok((Status::from_ok(ok), result))
        }
        Command::VerifyHga => {
            let h = input.graded()?;
            let c = HochschildHga::new(&h);
            let samples = hochschild_window(&h, cfg.weight).map_err(at(file, "--weight"))?;
            let axioms = verify_axioms(&c, &samples, AxiomConfig { max_k: cfg.arity_k, max_weight: cfg.weight });
            let low = verify_low_dim(&c, &samples, cfg.weight);
            let ok = axioms.passed() && low.passed();
            Ok((Status::from_ok(ok), json!({ "samples": samples.len(), "axioms": axioms, "low_dim": low })))
        }
        Command::VerifyLie => {
            let h = input.graded()?;
            let c = HochschildHga::new(&h);
            let samples = hochschild_window(&h, cfg.weight).map_err(at(file, "--weight"))?;
            let r = verify_lie(&c, &samples, cfg.weight);
            Ok((Status::from_ok(r.passed()), json!({ "samples": samples.len(), "lie": r })))
        }
        Command::BarBialgebra { letter_arity } => {
            let h = input.graded()?;
            let c = HochschildHga::new(&h);
            let letters = hochschild_window(&h, *letter_arity).map_err(at(file, "--letter-arity"))?;
            let axioms = verify_axioms(&c, &letters, AxiomConfig { max_k: cfg.arity_k, max_weight: cfg.weight });
            if !axioms.passed() {
                return Ok((Status::Violation, json!({ "axioms": axioms, "bialgebra": null })));
            }
            let (_, r) = build_bar_bialgebra(&c, letters, cfg.bar_l, &axioms).map_err(at(file, "--bar-L"))?;
            Ok((Status::from_ok(r.passed()), json!({ "axioms": axioms, "bialgebra": r })))
        }
        Command::Hochschild { m, n } => {
            let h = input.graded()?;
            let hh = hochschild_cohomology(&h, *m, *n).map_err(at(file, "--m"))?;
            let reps: Vec<String> = hh.class_representatives().iter().map(|c| c.format(&h)).collect();
            Ok((
                Status::Verified,
                json!({
                    "m": m,
                    "n": n,
                    "dimension": hh.dimension(),
                    "cochains": hh.space().dim(),
                    "cycle_rank": hh.cycle_rank(),
                    "boundary_rank": hh.boundary_rank(),
                    "representatives": reps,
                }),
            ))
        }
        Command::CheckTwist { version } => {
            let h = input.graded()?;
            let m = input.twist(&h, "twist")?;
            let (label, failure) = match version {
                Version::V1 => ("p", h.check_v1(&m)),
                Version::V2 => ("n", h.check_v2(&m.regrade())),
            };
            Ok((
                Status::from_ok(failure.is_none()),
                json!({
                    "carrier": m.carrier(),
                    "truncation": m.truncation(),
                    "twisting": failure.is_none(),
                    "first_failure": failure.map(|i| json!({ label: i })),
                }),
            ))
        }
        Command::Act => {
            let h = input.graded()?;
            let m = input.twist(&h, "twist")?;
            let g = input.need(&input.doc.gauge, "gauge")?.gauge(file, "gauge", &h)?;
            act_outcome(&h, h.act_v1(&g, &m), file, "gauge")
        }
        Command::Perturb { level } => {
            let h = input.graded()?;
            let m = input.twist(&h, "twist")?;
            let c = input.need(&input.doc.cochain, "cochain")?.build(file, "cochain", &h)?;
            act_outcome(&h, h.perturb(&m, *level, &c), file, "cochain")
        }
        Command::Obstruct { kind: ObstructKind::Quantize } => {
            let h = input.graded()?;
            let m = input.twist(&h, "twist")?;
            match quantization_obstruction(&h, &m) {
                Ok(o) => Ok((Status::from_ok(o.vanishes()), json!({ "obstruction": obstruction_json(&h, &o) }))),
                Err(hga_core::twist::TwistError::NotTwisting(l)) => {
                    Ok((Status::Violation, json!({ "obstruction": null, "not_twisting_at_level": l })))
                }
                Err(e) => Err(err(file, "twist", e.to_string())),
            }
        }
        Command::Obstruct { kind: ObstructKind::Trivialize } | Command::Trivialize => {
            let h = input.graded()?;
            let m = input.twist(&h, "twist")?;
            let target = input.doc.target.as_ref().map(|_| input.twist(&h, "target")).transpose()?;
            let (verdict, stats) = match &target {
                Some(t) => find_equivalence(&h, &m, t, cfg.budget),
                None => triviality_reduce(&h, &m, cfg.budget),
            }
            .map_err(at(file, "twist"))?;
            let (status, mut result) = match verdict {
                EquivalenceVerdict::Equivalent(g) => {
                    (Status::Verified, json!({ "verdict": "equivalent", "gauge": LevelsDoc::from_gauge(&h, &g) }))
                }
                EquivalenceVerdict::Obstructed(o) => {
                    (Status::Violation, json!({ "verdict": "obstructed", "obstruction": obstruction_json(&h, &o) }))
                }
                EquivalenceVerdict::Inconclusive => (Status::Inconclusive, json!({ "verdict": "inconclusive" })),
            };
            if matches!(cmd, Command::Obstruct { .. }) {
                result.as_object_mut().expect("object").remove("gauge");
            }
            result["target"] = json!(if target.is_some() { "target" } else { "zero" });
            result["search"] = json!(stats);
            Ok((status, result))
        }
        Command::Quantize { carrier, class } => {
            let h = input.graded()?;
            let carrier = match carrier {
                Carrier::Stasheff => TwistCarrier::Stasheff,
                Carrier::Formal => TwistCarrier::Formal,
            };
            let alpha = match class {
                Some(s) => parse_class(s).ok_or_else(|| err(file, "--class", "expected a string of 0 and 1"))?,
                None => {
                    let c = input.need(&input.doc.class, "class")?;
                    if c.iter().any(|&b| b > 1) {
                        return Err(err(file, "class", "coordinates must be 0 or 1"));
                    }
                    F2Vec::from_bits(&c.iter().map(|&b| b == 1).collect::<Vec<_>>())
                }
            };
            let (verdict, stats) =
                quantize(&h, carrier, &alpha, cfg.trunc_t, cfg.budget).map_err(at(file, "class"))?;
            let (status, mut result) = match verdict {
                QuantizeVerdict::Quantized(m) => {
                    (Status::Verified, json!({ "verdict": "quantized", "twist": LevelsDoc::from_twist(&h, &m) }))
                }
                QuantizeVerdict::Obstructed(o) => {
                    (Status::Violation, json!({ "verdict": "obstructed", "obstruction": obstruction_json(&h, &o) }))
                }
                QuantizeVerdict::Inconclusive => (Status::Inconclusive, json!({ "verdict": "inconclusive" })),
            };
            result["class"] = json!(bits(&alpha));
            result["search"] = json!(stats);
            Ok((status, result))
        }
        Command::CheckStar => {
            let h = input.graded()?;
            let b = input.need(&input.doc.star, "star")?.star(file, "star", &h)?;
            let f = check_star(&h, &b);
            Ok((Status::from_ok(f.is_none()), json!({ "order": b.order(), "associative": f.is_none(), "failure": f })))
        }
        Command::CheckGauge => {
            let h = input.graded()?;
            let b = input.need(&input.doc.star, "star")?.star(file, "star", &h)?;
            let bp = input.need(&input.doc.star_prime, "star_prime")?.star(file, "star_prime", &h)?;
            let g = input.need(&input.doc.gauge_series, "gauge_series")?.gauge_series(file, "gauge_series", &h)?;
            let f = check_gauge(&h, &b, &bp, &g).map_err(at(file, "gauge_series"))?;
            Ok((Status::from_ok(f.is_none()), json!({ "order": b.order(), "equivalent": f.is_none(), "failure": f })))
        }
        Command::StarToTwist => {
            let h = input.graded()?;
            let b = input.need(&input.doc.star, "star")?.star(file, "star", &h)?;
            let t = star_to_twist(&b).map_err(at(file, "star"))?;
            let failure = h.check_v2(&t);
            Ok((
                Status::from_ok(failure.is_none()),
                json!({
                    "twist": LevelsDoc::from_twist(&h, &t.regrade()),
                    "twisting": failure.is_none(),
                    "first_failure": failure.map(|n| json!({ "n": n })),
                }),
            ))
        }
        Command::CheckAinf => {
            let m = input.ainf("ainf")?;
            let f = check_ainf(&m, cfg.window);
            Ok((
                Status::from_ok(f.is_none()),
                json!({ "minimal": m.is_minimal(), "max_arity": m.max_arity(), "holds": f.is_none(), "failure": f }),
            ))
        }
        Command::CheckAinfMorphism => {
            let (src, dst, f) = morphism(&input)?;
            let fail = check_ainf_morphism(&f, &src, &dst, cfg.window);
            Ok((Status::from_ok(fail.is_none()), json!({ "holds": fail.is_none(), "failure": fail })))
        }
        Command::AinfBar => {
            let m = input.ainf("ainf")?;
            let b = ainf_bar(&m, cfg.bar_l).map_err(at(file, "ainf"))?;
            let r = b.report();
            Ok((Status::from_ok(r.holds()), json!(r)))
        }
        Command::ClassifyMorphism => {
            let (src, dst, f) = morphism(&input)?;
            let c = classify_morphism(&f, &src, &dst);
            Ok((Status::from_ok(c.chain_map), json!(c)))
        }
        Command::StasheffToTwist => {
            let h = input.graded()?;
            let m = input.ainf("ainf")?;
            let t = stasheff_to_twist(&h, &m).map_err(at(file, "ainf"))?;
            let failure = h.check_v1(&t);
            Ok((
                Status::from_ok(failure.is_none()),
                json!({
                    "twist": LevelsDoc::from_twist(&h, &t),
                    "twisting": failure.is_none(),
                    "first_failure": failure.map(|p| json!({ "p": p })),
                }),
            ))
        }
        Command::Formality => {
            let h = input.graded()?;
            let r = intrinsic_formality(&h, cfg.nmax).map_err(at(file, "--nmax"))?;
            let status = if r.certified { Status::Verified } else { Status::Inconclusive };
            Ok((status, json!(r)))
        }
        Command::GerstenhaberReport => {
            let h = input.graded()?;
            let r = gerstenhaber_report(&h, cfg.order_n, cfg.budget).map_err(at(file, "algebra"))?;
            let status = if r.inconclusive() { Status::Inconclusive } else { Status::Verified };
            Ok((status, json!(r)))
        }
    }
}

fn act_outcome(
    h: &GradedAlgebra,
    r: Result<TwistV1, hga_core::twist::TwistError>,
    file: &str,
    field: &str,
) -> Outcome {
    match r {
        Ok(m) => {
            let failure = h.check_v1(&m);
            Ok((
                Status::from_ok(failure.is_none()),
                json!({ "twist": LevelsDoc::from_twist(h, &m), "twisting": failure.is_none() }),
            ))
        }
        Err(hga_core::twist::TwistError::NotTwisting(l)) => {
            Ok((Status::Violation, json!({ "twist": null, "not_twisting_at_level": l })))
        }
        Err(e) => Err(err(file, field, e.to_string())),
    }
}

fn morphism(input: &Input) -> Result<(AinfAlgebra, AinfAlgebra, hga_core::deform::AinfMorphism), InputError> {
    let src = input.ainf("ainf")?;
    let dst = match &input.doc.ainf_target {
        Some(_) => input.ainf("ainf_target")?,
        None => src.clone(),
    };
    let f = input.need(&input.doc.morphism, "morphism")?.build(&input.file, &src, &dst)?;
    Ok((src, dst, f))
}

fn parse_class(s: &str) -> Option<F2Vec> {
    let bits: Option<Vec<bool>> = s
        .chars()
        .map(|c| match c {
            '0' => Some(false),
            '1' => Some(true),
            _ => None,
        })
        .collect();
    bits.map(|b| F2Vec::from_bits(&b))
}
