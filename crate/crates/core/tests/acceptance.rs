//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

// `ensure!` negates its condition on purpose so a NaN measurement fails.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use origami::api::{router, DatasetPayload, Mode, RenderRequest, RenderResponse};
use origami::data::write_area_report;
use origami::geometry::row_areas;
use origami::{
    apply_weights, area_calculation, build_polygon, default_aux, embedded_example,
    polygon_area_closed_form, polygon_area_shoelace, radar_polygon_area, render_pairwise,
    render_single, render_weighted, standardize_weights, AuxiliaryConfig, Dataset, OrigamiError,
    RenderOptions,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tower::ServiceExt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

const SAMPLE_WEIGHTS: [f64; 5] = [0.15, 0.25, 0.3, 0.2, 0.1];

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rel_err(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn random_row(rng: &mut ChaCha8Rng) -> (Vec<f64>, f64) {
    let n = rng.random_range(3..=12);
    let values = (0..n).map(|_| rng.random::<f64>()).collect();
    // (0, 1]
    let aux = 1.0 - rng.random::<f64>();
    (values, aux)
}

fn permutation_invariance() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0516);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let (values, aux) = random_row(&mut rng);
        let base = polygon_area_closed_form(&values, aux).map_err(|e| e.to_string())?;
        let mut perm = values.clone();
        for _ in 0..10 {
            perm.shuffle(&mut rng);
            let area = polygon_area_closed_form(&perm, aux).map_err(|e| e.to_string())?;
            worst = worst.max(rel_err(base, area));
        }
    }
    let elapsed = start.elapsed();
    ensure!(worst <= 1e-12, "max relative deviation {worst:e} > 1e-12");
    ensure!(
        elapsed < Duration::from_secs(5),
        "took {elapsed:?} (limit 5 s)"
    );
    Ok(format!(
        "1000 datasets x 10 permutations, max rel dev {worst:.1e}, {elapsed:.2?}"
    ))
}

fn radar_witness() -> Outcome {
    let adjacent = [1.0, 1.0, 0.0, 0.0];
    let alternating = [1.0, 0.0, 1.0, 0.0];
    let ra = radar_polygon_area(&adjacent).map_err(|e| e.to_string())?;
    let rb = radar_polygon_area(&alternating).map_err(|e| e.to_string())?;
    ensure!(
        (ra - 0.5).abs() <= 1e-12,
        "radar (1,1,0,0) = {ra}, expected 0.5"
    );
    ensure!(rb.abs() <= 1e-12, "radar (1,0,1,0) = {rb}, expected 0");
    for aux in [0.1, 0.5, 1.0] {
        let oa = polygon_area_closed_form(&adjacent, aux).map_err(|e| e.to_string())?;
        let ob = polygon_area_closed_form(&alternating, aux).map_err(|e| e.to_string())?;
        ensure!(oa == ob, "origami areas differ at aux {aux}: {oa} vs {ob}");
    }
    Ok(format!("radar {ra} vs {rb:.1e}; origami areas equal"))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    let mut worst = 0.0f64;
    let mut worst_independent = 0.0f64;
    for _ in 0..10_000 {
        let (values, aux) = random_row(&mut rng);
        let closed = polygon_area_closed_form(&values, aux).map_err(|e| e.to_string())?;
        let pg = build_polygon(
            &values,
            AuxiliaryConfig::new(aux).map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        worst = worst.max(rel_err(closed, polygon_area_shoelace(&pg)));
        worst_independent =
            worst_independent.max(rel_err(closed, common::oracle_area(&values, aux)));
    }
    let elapsed = start.elapsed();
    ensure!(
        worst <= 1e-12,
        "closed form vs shoelace: max rel err {worst:e}"
    );
    ensure!(
        worst_independent <= 1e-12,
        "closed form vs test oracle: max rel err {worst_independent:e}"
    );
    ensure!(
        elapsed < Duration::from_secs(10),
        "took {elapsed:?} (limit 10 s)"
    );
    Ok(format!(
        "10000 polygons, max rel err {worst:.1e} (test oracle {worst_independent:.1e}), {elapsed:.2?}"
    ))
}

fn linearity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x11AE);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let (values, aux) = random_row(&mut rng);
        let c: f64 = rng.random();
        let scaled: Vec<f64> = values.iter().map(|v| v * c).collect();
        let base = polygon_area_closed_form(&values, aux).map_err(|e| e.to_string())?;
        let area = polygon_area_closed_form(&scaled, aux).map_err(|e| e.to_string())?;
        worst = worst.max((area - c * base).abs());
    }
    ensure!(worst <= 1e-12, "max |area(c r) - c area(r)| = {worst:e}");
    Ok(format!("1000 pairs, max abs dev {worst:.1e}"))
}

fn table_reproduction() -> Outcome {
    let ds = embedded_example();
    let expected = [
        ("Intracervical PGE2", 0.602),
        ("High-dose oral misoprostol", 0.616),
        ("Titrated oral misoprostol", 0.662),
    ];
    for aux_value in [0.04, 0.08, 0.5] {
        let aux = AuxiliaryConfig::for_dataset(aux_value, &ds).map_err(|e| e.to_string())?;
        let report = area_calculation(&ds, aux).map_err(|e| e.to_string())?;
        let max_area = common::oracle_area(&[1.0; 5], aux_value);
        for (entry, row) in report.entries.iter().zip(ds.values()) {
            let mean = row.iter().sum::<f64>() / row.len() as f64;
            ensure!(
                (entry.normalized_area - mean).abs() <= 1e-12,
                "{} at aux {aux_value}: normalized {} vs mean {mean}",
                entry.object,
                entry.normalized_area
            );
            let oracle = common::oracle_area(row, aux_value) / max_area;
            ensure!(
                (entry.normalized_area - oracle).abs() <= 1e-12,
                "{} at aux {aux_value}: normalized {} vs shoelace oracle {oracle}",
                entry.object,
                entry.normalized_area
            );
        }
        for (name, want) in expected {
            let got = report
                .get(name)
                .ok_or(format!("missing {name}"))?
                .normalized_area;
            ensure!((got - want).abs() <= 1e-12, "{name}: {got} vs {want}");
        }
    }
    Ok("8 rows = row means at aux 0.04/0.08/0.5; 0.602, 0.616, 0.662 reproduced".into())
}

fn weighting() -> Outcome {
    let ds = embedded_example();
    let aux = default_aux(&ds).map_err(|e| e.to_string())?;
    let equal = standardize_weights(&[0.2; 5], 5).map_err(|e| e.to_string())?;
    for name in ds.object_names() {
        let row = ds.row(name).map_err(|e| e.to_string())?;
        let same = apply_weights(row, &equal).map_err(|e| e.to_string())?;
        ensure!(same == row, "{name}: equal weights changed values");
        let p1 = build_polygon(row, aux).map_err(|e| e.to_string())?;
        let p2 = build_polygon(&same, aux).map_err(|e| e.to_string())?;
        ensure!(p1 == p2, "{name}: equal weights changed the polygon");
    }

    let wv = standardize_weights(&SAMPLE_WEIGHTS, 5).map_err(|e| e.to_string())?;
    let row = ds
        .row("High-dose oral misoprostol")
        .map_err(|e| e.to_string())?;
    let weighted = apply_weights(row, &wv).map_err(|e| e.to_string())?;
    ensure!(
        weighted[2] == 0.81,
        "attribute 3 changed to {}",
        weighted[2]
    );
    for k in [0, 1, 3, 4] {
        ensure!(
            weighted[k] < row[k],
            "attribute {} not shrunk: {} vs {}",
            k + 1,
            weighted[k],
            row[k]
        );
    }
    let expected = [0.39, 0.566667, 0.81, 0.253333, 0.143333];
    for (got, want) in weighted.iter().zip(expected) {
        ensure!((got - want).abs() < 5e-7, "weighted value {got} vs {want}");
    }

    match standardize_weights(&[0.5, 0.6], 2) {
        Err(OrigamiError::WeightSumViolation { .. }) => {}
        other => return Err(format!("sum 1.1 not rejected: {other:?}")),
    }
    match standardize_weights(&[0.5, 0.6, -0.1], 3) {
        Err(OrigamiError::NonPositiveWeight { .. }) => {}
        other => return Err(format!("negative weight not rejected: {other:?}")),
    }
    match standardize_weights(&[0.5, 0.5, 0.0], 3) {
        Err(OrigamiError::NonPositiveWeight { .. }) => {}
        other => return Err(format!("zero weight not rejected: {other:?}")),
    }
    Ok("equal weights are identity; sample weights keep 0.81 and shrink the rest; bad weights rejected".into())
}

fn aux_default() -> Outcome {
    let ds = embedded_example();
    let aux = default_aux(&ds).map_err(|e| e.to_string())?;
    ensure!(aux.value() == 0.08, "default aux {} != 0.08", aux.value());
    let names = |p: &str| (0..3).map(|i| format!("{p}{i}")).collect::<Vec<_>>();
    let zero = Dataset::new(names("o"), names("a"), vec![vec![0.0, 0.5, 0.9]; 3], 1.0)
        .map_err(|e| e.to_string())?;
    match default_aux(&zero) {
        Err(OrigamiError::AuxiliaryUnspecified) => {
            Ok("0.08; zero minimum -> AuxiliaryUnspecified".into())
        }
        other => Err(format!("zero minimum gave {other:?}")),
    }
}

fn svg_structure() -> Outcome {
    use common::{count_class, polygons};
    let ds = embedded_example();
    let aux = default_aux(&ds).map_err(|e| e.to_string())?;
    let opts = RenderOptions::default();
    for name in ds.object_names() {
        let svg = render_single(&ds, name, aux, &opts).map_err(|e| e.to_string())?;
        let doc = roxmltree::Document::parse(&svg).map_err(|e| format!("{name}: {e}"))?;
        ensure!(
            count_class(&doc, "line", "axis-main") == 5,
            "{name}: main axes"
        );
        ensure!(
            count_class(&doc, "line", "axis-aux") == 5,
            "{name}: aux axes"
        );
        ensure!(
            count_class(&doc, "polygon", "grid-ring") == 4,
            "{name}: grid rings"
        );
        ensure!(
            count_class(&doc, "circle", "marker") == 5,
            "{name}: markers"
        );
        let polys = polygons(&doc);
        ensure!(polys.len() == 1, "{name}: {} polygons", polys.len());
        ensure!(
            polys[0].points.len() == 10 && polys[0].closed,
            "{name}: polygon shape"
        );

        let plain = RenderOptions {
            point_symbol: origami::render::PointSymbol::None,
            ..RenderOptions::default()
        };
        let svg = render_single(&ds, name, aux, &plain).map_err(|e| e.to_string())?;
        let doc = roxmltree::Document::parse(&svg).map_err(|e| e.to_string())?;
        ensure!(
            count_class(&doc, "circle", "marker") == 0,
            "{name}: pty=32 kept markers"
        );
    }

    let svg = render_pairwise(
        &ds,
        "High-dose oral misoprostol",
        "High-dose vaginal misoprostol",
        aux,
        &opts,
    )
    .map_err(|e| e.to_string())?;
    let doc = roxmltree::Document::parse(&svg).map_err(|e| e.to_string())?;
    ensure!(polygons(&doc).len() == 2, "pairwise polygon count");

    let wv = standardize_weights(&SAMPLE_WEIGHTS, 5).map_err(|e| e.to_string())?;
    let svg = render_weighted(&ds, "High-dose oral misoprostol", &wv, aux, &opts)
        .map_err(|e| e.to_string())?;
    let doc = roxmltree::Document::parse(&svg).map_err(|e| e.to_string())?;
    let polys = polygons(&doc);
    ensure!(polys.len() == 2, "weighted polygon count");
    ensure!(
        polys[0].stroke == "#338080" && polys[0].dash.is_none(),
        "unweighted polygon: stroke {} dash {:?}",
        polys[0].stroke,
        polys[0].dash
    );
    ensure!(
        polys[1].stroke == "#994D4D" && polys[1].dash.is_some(),
        "weighted polygon: stroke {} dash {:?}",
        polys[1].stroke,
        polys[1].dash
    );
    Ok("8 single charts, pty=32, pairwise and weighted structure verified".into())
}

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_origami"))
}

fn run_bin(exe: &Path, args: &[&str], stdin: &[u8]) -> Result<(i32, Vec<u8>, String), String> {
    let mut child = Command::new(exe)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child
        .stdin
        .take()
        .ok_or("no stdin")?
        .write_all(stdin)
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    Ok((
        out.status.code().unwrap_or(-1),
        out.stdout,
        String::from_utf8_lossy(&out.stderr).into_owned(),
    ))
}

fn cli_end_to_end() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let (code, csv, err) = run_bin(&bin(), &["example"], b"")?;
    ensure!(code == 0, "example exited {code}: {err}");

    let out_dir = dir.path().join("all");
    let out_str = out_dir.to_string_lossy().into_owned();
    let (code, _, err) = run_bin(
        &bin(),
        &["plot", "--input", "-", "--object", "all", "--out", &out_str],
        &csv,
    )?;
    ensure!(code == 0, "plot --object all exited {code}: {err}");
    let files: Vec<_> = std::fs::read_dir(&out_dir)
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok())
        .collect();
    ensure!(files.len() == 8, "{} SVG files written", files.len());
    for f in &files {
        let text = std::fs::read_to_string(f.path()).map_err(|e| e.to_string())?;
        roxmltree::Document::parse(&text).map_err(|e| format!("{:?}: {e}", f.path()))?;
    }

    let (code, area, err) = run_bin(&bin(), &["area", "--input", "-"], &csv)?;
    ensure!(code == 0, "area exited {code}: {err}");
    let ds = embedded_example();
    let expected = write_area_report(
        &area_calculation(&ds, default_aux(&ds).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?,
    );
    ensure!(
        area == expected.as_bytes(),
        "area stdout differs from the report writer"
    );

    #[cfg(unix)]
    {
        let alias = dir.path().join("snowflake");
        std::os::unix::fs::symlink(bin(), &alias).map_err(|e| e.to_string())?;
        let cases: [&[&str]; 4] = [
            &["plot", "--input", "-", "--object", "Intracervical PGE2"],
            &[
                "pairwise",
                "--input",
                "-",
                "--object1",
                "High-dose oral misoprostol",
                "--object2",
                "High-dose vaginal misoprostol",
            ],
            &[
                "weighted",
                "--input",
                "-",
                "--object",
                "High-dose oral misoprostol",
                "--weights",
                "0.15,0.25,0.3,0.2,0.1",
            ],
            &["area", "--input", "-"],
        ];
        for args in cases {
            let a = run_bin(&bin(), args, &csv)?;
            let b = run_bin(&alias, args, &csv)?;
            ensure!(a.0 == 0 && b.0 == 0, "{args:?}: exit {} / {}", a.0, b.0);
            ensure!(a.1 == b.1, "{args:?}: snowflake output differs");
        }
    }
    Ok(
        "8 SVGs from `example | plot --object all`; area bytes match; snowflake alias identical"
            .into(),
    )
}

async fn api_svg(req: &RenderRequest) -> Result<Vec<u8>, String> {
    let body = serde_json::to_vec(req).map_err(|e| e.to_string())?;
    let resp = router(None)
        .oneshot(
            Request::post("/api/render")
                .header("content-type", "application/json")
                .body(Body::from(body))
                .map_err(|e| e.to_string())?,
        )
        .await
        .map_err(|e| e.to_string())?;
    let status = resp.status();
    let bytes = resp
        .into_body()
        .collect()
        .await
        .map_err(|e| e.to_string())?
        .to_bytes()
        .to_vec();
    ensure!(
        status == StatusCode::OK,
        "status {status}: {}",
        String::from_utf8_lossy(&bytes)
    );
    Ok(bytes)
}

fn api_parity() -> Outcome {
    let rt = tokio::runtime::Builder::new_multi_thread()
        .worker_threads(4)
        .enable_all()
        .build()
        .map_err(|e| e.to_string())?;
    let (_, csv, _) = run_bin(&bin(), &["example"], b"")?;
    let data = DatasetPayload::from(&embedded_example());
    let request = |mode, objects: &[&str], weights: Option<Vec<f64>>| RenderRequest {
        mode,
        data: data.clone(),
        objects: objects.iter().map(|s| s.to_string()).collect(),
        weights,
        aux: None,
        options: None,
    };
    let cases = [
        (
            request(Mode::Single, &["Intracervical PGE2"], None),
            vec!["plot", "--input", "-", "--object", "Intracervical PGE2"],
        ),
        (
            request(
                Mode::Pairwise,
                &[
                    "High-dose oral misoprostol",
                    "High-dose vaginal misoprostol",
                ],
                None,
            ),
            vec![
                "pairwise",
                "--input",
                "-",
                "--object1",
                "High-dose oral misoprostol",
                "--object2",
                "High-dose vaginal misoprostol",
            ],
        ),
        (
            request(
                Mode::Weighted,
                &["High-dose oral misoprostol"],
                Some(SAMPLE_WEIGHTS.to_vec()),
            ),
            vec![
                "weighted",
                "--input",
                "-",
                "--object",
                "High-dose oral misoprostol",
                "--weights",
                "0.15,0.25,0.3,0.2,0.1",
            ],
        ),
    ];
    for (req, args) in &cases {
        let body = rt.block_on(api_svg(req))?;
        let resp: RenderResponse = serde_json::from_slice(&body).map_err(|e| e.to_string())?;
        let (code, cli_svg, err) = run_bin(&bin(), args, &csv)?;
        ensure!(code == 0, "{args:?} exited {code}: {err}");
        ensure!(
            resp.svg.as_bytes() == cli_svg,
            "{:?}: API and CLI SVG differ",
            req.mode
        );
        for (name, area) in &resp.areas {
            let row = embedded_example()
                .row(name)
                .map_err(|e| e.to_string())?
                .to_vec();
            let aux = AuxiliaryConfig::new(0.08).map_err(|e| e.to_string())?;
            let (_, normalized) = row_areas(&row, aux, 1.0).map_err(|e| e.to_string())?;
            ensure!(area.normalized == normalized, "{name}: area mismatch");
        }
    }

    let weighted = cases[2].0.clone();
    let bodies = rt.block_on(async {
        let tasks: Vec<_> = (0..50)
            .map(|_| {
                let req = weighted.clone();
                tokio::spawn(async move { api_svg(&req).await })
            })
            .collect();
        let mut out = Vec::new();
        for t in tasks {
            out.push(t.await.map_err(|e| e.to_string())??);
        }
        Ok::<_, String>(out)
    })?;
    ensure!(bodies.len() == 50, "{} responses", bodies.len());
    ensure!(
        bodies.iter().all(|b| b == &bodies[0]),
        "concurrent responses differ"
    );
    Ok("single/pairwise/weighted SVG bytes equal CLI; 50 concurrent responses identical".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("permutation invariance", permutation_invariance),
        ("radar falsification witness", radar_witness),
        ("oracle equivalence", oracle_equivalence),
        ("linearity", linearity),
        ("example table reproduction", table_reproduction),
        ("weighting", weighting),
        ("auxiliary default", aux_default),
        ("svg structure", svg_structure),
        ("cli end-to-end", cli_end_to_end),
        ("api parity and statelessness", api_parity),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
