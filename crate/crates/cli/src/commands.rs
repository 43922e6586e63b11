use cr4_core::adjunction::{
    chern_eval, genus_from, jump_count, lai_dim4_check, pairing_from_geometry, reconstruct_gram,
    self_int_from_geometry, synthesize_reconstruction, ReconstructionInput, SurfaceGeometry,
};
use cr4_core::bounds::{
    char_sphere_selfint_bounds, check_bounds, check_bounds_nonnegative, integer_feasible,
    jump_bounds, RationalInterval,
};
use cr4_core::characteristic::{
    enumerate_characteristic, find_characteristic, is_characteristic, validate_c1_almost_complex,
};
use cr4_core::detector::{
    find_jump_points, presets, sample_field, AlmostComplexStructure, JumpPoint,
};
use cr4_core::json::{int_to_json, int_vec_to_json};
use cr4_core::lattice::io::gram_to_json;
use cr4_core::lattice::{
    classify_indefinite_unimodular, determinant, direct_sum, inertia, is_unimodular,
};
use cr4_core::{json, Error, IntegerForm, Result};
use num::BigInt;
use serde_json::{json, Value};

use crate::args::*;
use crate::input::{
    inline_or_file, load_geometry, load_gram, load_vector, read_source, standard_form,
};

/// Payload plus warnings for a successful command.
pub struct Output {
    pub payload: Value,
    pub warnings: Vec<String>,
}

impl From<Value> for Output {
    fn from(payload: Value) -> Self {
        Output {
            payload,
            warnings: Vec::new(),
        }
    }
}

fn form_of(src: &FormSource) -> Result<IntegerForm> {
    match (&src.gram, &src.standard) {
        (Some(path), None) => load_gram(path),
        (None, Some(name)) => standard_form(name),
        _ => Err(Error::InvalidArgument(
            "pass exactly one of --gram or --standard".into(),
        )),
    }
}

pub fn run(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Form(c) => form(c),
        Command::Char(c) => characteristic(c),
        Command::Adjunction(c) => adjunction(c),
        Command::Bounds(c) => bounds(c),
        Command::Detect(c) => detect(c),
    }
}

fn form(cmd: &FormCommand) -> Result<Output> {
    Ok(match cmd {
        FormCommand::Inertia(a) => {
            let i = inertia(&form_of(&a.form)?);
            json!({"b_plus": i.b_plus, "b_minus": i.b_minus, "b_zero": i.b_zero}).into()
        }
        FormCommand::Det(a) => {
            let f = form_of(&a.form)?;
            json!({"determinant": int_to_json(&determinant(&f)), "unimodular": is_unimodular(&f)})
                .into()
        }
        FormCommand::Parity(a) => json!({"parity": form_of(&a.form)?.parity()}).into(),
        FormCommand::Classify(a) => {
            let c = classify_indefinite_unimodular(&form_of(&a.form)?)?;
            let mut v = serde_json::to_value(c).expect("serializable");
            v["description"] = Value::String(c.to_string());
            v["representative"] = gram_to_json(&c.representative());
            v.into()
        }
        FormCommand::Sum(a) => {
            let forms = a
                .gram
                .iter()
                .map(|p| load_gram(p))
                .collect::<Result<Vec<_>>>()?;
            gram_to_json(&direct_sum(&forms)).into()
        }
        FormCommand::Standard(a) => gram_to_json(&standard_form(&a.name)?).into(),
        FormCommand::Pair(a) => {
            let f = form_of(&a.form)?;
            let x = load_vector(&a.x)?;
            let y = match &a.y {
                Some(y) => load_vector(y)?,
                None => x.clone(),
            };
            json!({"pairing": int_to_json(&f.pairing(&x, &y)?)}).into()
        }
    })
}

fn characteristic(cmd: &CharCommand) -> Result<Output> {
    Ok(match cmd {
        CharCommand::Find(a) => serde_json::to_value(find_characteristic(&form_of(&a.form)?)?)
            .expect("serializable")
            .into(),
        CharCommand::Check(a) => {
            json!({"characteristic": is_characteristic(&form_of(&a.form)?, &load_vector(&a.xi)?)?})
                .into()
        }
        CharCommand::Enumerate(a) => {
            let vs = enumerate_characteristic(&form_of(&a.form)?, a.r#box)?;
            json!({"count": vs.len(), "vectors": vs}).into()
        }
        CharCommand::ValidateC1(a) => {
            let r = validate_c1_almost_complex(&form_of(&a.form)?, &load_vector(&a.c1)?)?;
            let mut out = Output::from(serde_json::to_value(&r).expect("serializable"));
            if !r.characteristic {
                out.warnings.push("c1 is not characteristic".into());
            }
            if !r.wu_identity {
                out.warnings.push(format!(
                    "c1^2 = {} differs from 2 chi + 3 sigma = {}",
                    r.c1_squared, r.expected
                ));
            }
            out
        }
    })
}

fn adjunction(cmd: &AdjunctionCommand) -> Result<Output> {
    Ok(match cmd {
        AdjunctionCommand::JumpCount(a) => json!({"fc": int_to_json(&jump_count(a.genus.clone(), a.ff.clone(), a.c1f.clone())?)}).into(),
        AdjunctionCommand::Genus(a) => json!({"genus": int_to_json(&genus_from(a.ff.clone(), a.c1f.clone(), a.fc.clone())?)}).into(),
        AdjunctionCommand::SelfInt(a) => {
            let d = SurfaceGeometry::new(a.genus.clone(), a.c1f.clone(), a.fc.clone());
            if d.genus < BigInt::from(0) {
                return Err(Error::InvalidGenus(d.genus));
            }
            json!({"ff": int_to_json(&self_int_from_geometry(&d))}).into()
        }
        AdjunctionCommand::Pair(a) => {
            let (f, g, fg) = (load_geometry(&a.f)?, load_geometry(&a.g)?, load_geometry(&a.fg)?);
            json!({"pairing": int_to_json(&pairing_from_geometry(&f, &g, &fg)?)}).into()
        }
        AdjunctionCommand::Reconstruct(a) => {
            let input = ReconstructionInput::from_json(&json::parse(&read_source(&a.input)?)?)?;
            let r = reconstruct_gram(&input)?;
            let mut v = gram_to_json(&r.form);
            v["determinant"] = int_to_json(&r.determinant);
            v["unimodular"] = Value::Bool(r.unimodular);
            let mut out = Output::from(v);
            if !r.unimodular {
                out.warnings.push(format!("reconstructed form is not unimodular (determinant {})", r.determinant));
            }
            out
        }
        AdjunctionCommand::LaiCheck(a) => {
            json!({"holds": lai_dim4_check(a.genus.clone(), a.ff.clone(), a.c1f.clone(), a.count.clone())}).into()
        }
        AdjunctionCommand::ChernEval(a) => {
            let f = form_of(&a.form)?;
            json!({"c1f": int_to_json(&chern_eval(&f, &load_vector(&a.c1)?, &load_vector(&a.class)?)?)}).into()
        }
        AdjunctionCommand::Synthesize(a) => {
            let f = form_of(&a.form)?;
            let c1 = match &a.c1 {
                Some(c) => load_vector(c)?,
                None => find_characteristic(&f)?.base,
            };
            let input = synthesize_reconstruction(&f, &c1)?;
            let mut v = input.to_json();
            v["c1"] = int_vec_to_json(c1.coords());
            v.into()
        }
    })
}

fn interval_json(i: &RationalInterval) -> Value {
    let mut v = json!({
        "lo": json::rational_to_string(&i.lo),
        "hi": json::rational_to_string(&i.hi),
    });
    if i.empty {
        v["empty"] = Value::Bool(true);
    }
    v
}

fn bounds(cmd: &BoundsCommand) -> Result<Output> {
    Ok(match cmd {
        BoundsCommand::Jump(a) => {
            let i = jump_bounds(a.bplus, a.bminus, a.c1f.clone(), a.case);
            let mut v = interval_json(&i);
            if a.feasible || a.nonnegative {
                v["feasible"] = match integer_feasible(&i, a.nonnegative) {
                    Some(r) => json!({"min": int_to_json(&r.min), "max": int_to_json(&r.max)}),
                    None => Value::Null,
                };
            }
            v.into()
        }
        BoundsCommand::Selfint(a) => {
            interval_json(&char_sphere_selfint_bounds(a.bplus, a.bminus, a.case)).into()
        }
        BoundsCommand::Check(a) => {
            let within = if a.nonnegative {
                check_bounds_nonnegative(a.n.clone(), a.bplus, a.bminus, a.c1f.clone(), a.case)
            } else {
                check_bounds(a.n.clone(), a.bplus, a.bminus, a.c1f.clone(), a.case)
            };
            json!({"within": within}).into()
        }
    })
}

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn point_json(p: &JumpPoint) -> Value {
    json!({
        "chart": p.chart_id,
        "params": [sig12(p.params.0), sig12(p.params.1)],
        "location": p.location.iter().map(|&x| sig12(x)).collect::<Vec<_>>(),
        "index": p.index,
        "residual": sig12(p.residual),
        "complex_orientation": p.complex_orientation,
    })
}

fn detect(a: &DetectArgs) -> Result<Output> {
    let (surface, structure) = match presets::by_name(&a.surface) {
        Ok(s) => (s, AlmostComplexStructure::standard()),
        Err(_) if std::path::Path::new(&a.surface).exists() => {
            presets::from_json(&inline_or_file(&format!("@{}", a.surface))?)?
        }
        Err(e) => return Err(e),
    };
    if let Some(path) = &a.dump_field {
        let mut csv = String::from("chart,u,v,re,im\n");
        for s in sample_field(&surface, &structure, a.grid)? {
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                s.chart_id,
                sig12(s.u),
                sig12(s.v),
                sig12(s.value.re),
                sig12(s.value.im)
            ));
        }
        std::fs::write(path, csv).map_err(|e| Error::InvalidArgument(format!("{path}: {e}")))?;
    }
    let r = find_jump_points(&surface, &structure, a.grid, a.tol)?;
    let mut out = Output::from(json!({
        "surface": surface.name,
        "grid": a.grid,
        "tol": a.tol,
        "points": r.points.iter().map(point_json).collect::<Vec<_>>(),
        "total_index": r.total_index(),
        "oriented_total": r.total_oriented_index(),
        "dropped_seeds": r.dropped_seeds,
    }));
    if r.dropped_seeds > 0 {
        out.warnings
            .push(format!("{} Newton seeds did not converge", r.dropped_seeds));
    }
    if r.zero_index > 0 {
        out.warnings.push(format!(
            "{} converged points had winding number 0 and were dropped",
            r.zero_index
        ));
    }
    Ok(out)
}
