use std::process::Command;

use farey_cli::report::{CfReport, DistanceReport, Envelope, GenKeenReport, GeodesicsReport, LadderReport};
use farey_cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use farey_core::{
    all_geodesics, cf_eval, classify_02, classify_03, ladder, Caps, CompositeLink,
    ContinuedFraction, ExtendedRational, GeodesicSet, SplittingReport, TwoBridgeLink,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;

fn farey(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["farey"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn stdout(args: &[&str]) -> String {
    let (code, out, err) = farey(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out
}

fn parse<T: DeserializeOwned>(json: &str) -> T {
    let env: Envelope<T> = serde_json::from_str(json).unwrap();
    assert_eq!(env.v, 1);
    env.body
}

fn q(s: &str) -> ExtendedRational {
    s.parse().unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(stdout(&["cf", "79/182"]), "[2,3,3,2,3]\n");
    assert_eq!(stdout(&["eval", "2,3,3,2,3"]), "79/182\n");
    assert_eq!(stdout(&["distance", "1/0", "3/10"]), "3\n");
    let json = stdout(&["classify-03", "3/1", "5/2", "--json"]);
    for frag in [r#""distance":1"#, r#""case":"iii""#, r#""keen":false"#, r#""v":1"#] {
        assert!(json.contains(frag), "{json}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(farey(&["distance", "1/0", "0/0"]).0, EXIT_DOMAIN);
    assert_eq!(farey(&["distance", "1/0", "x"]).0, EXIT_DOMAIN);
    assert_eq!(farey(&["cf", "3/2"]).0, EXIT_DOMAIN);
    assert_eq!(farey(&["classify-2bridge", "4", "2"]).0, EXIT_DOMAIN);
    assert_eq!(farey(&["gen-keen", "3", "--entries", "3,2"]).0, EXIT_DOMAIN);
    assert_eq!(farey(&["ladder", "1/0", "79/182", "--ladder-cap", "12"]).0, EXIT_RESOURCE);
    assert_eq!(farey(&["geodesics", "1/0", "79/182", "--geo-cap", "3"]).0, EXIT_RESOURCE);
    assert_eq!(farey(&[]).0, EXIT_USAGE);
    assert_eq!(farey(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(farey(&["distance", "1/0"]).0, EXIT_USAGE);
    assert_eq!(farey(&["classify-03", "3/1", "5/2", "7/3"]).0, EXIT_USAGE);
    assert_eq!(farey(&["ladder", "1/0", "3/10", "--render", "svg", "--json"]).0, EXIT_USAGE);
    let (code, out, _) = farey(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("classify-2bridge"));
    assert_eq!(farey(&["--version"]).0, EXIT_OK);
}

#[test]
fn negative_slopes_are_accepted() {
    assert_eq!(stdout(&["distance", "-2/5", "7/3"]), "5\n");
    assert_eq!(stdout(&["distance", "-1/0", "-3/1"]), "1\n");
}

#[test]
fn binary_exit_status_and_env_caps() {
    let bin = env!("CARGO_BIN_EXE_farey");
    let out = Command::new(bin).args(["cf", "79/182"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(out.stdout, b"[2,3,3,2,3]\n");

    let capped = Command::new(bin)
        .args(["ladder", "1/0", "79/182"])
        .env("FAREY_LADDER_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(EXIT_RESOURCE));
    assert!(capped.stdout.is_empty());
    assert!(!capped.stderr.is_empty());

    // the flag wins over the environment
    let flag = Command::new(bin)
        .args(["ladder", "1/0", "79/182", "--ladder-cap", "100"])
        .env("FAREY_LADDER_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(flag.status.code(), Some(0));

    let geo = Command::new(bin)
        .args(["geodesics", "1/0", "1/2"])
        .env("FAREY_GEO_CAP", "1")
        .output()
        .unwrap();
    assert_eq!(geo.status.code(), Some(EXIT_RESOURCE));

    let usage = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}

#[test]
fn json_round_trips() {
    let caps = Caps::default();

    let r: CfReport = parse(&stdout(&["cf", "79/182", "--json"]));
    assert_eq!(r.slope, q("79/182"));
    assert_eq!(r.cf, ContinuedFraction::from_u64s(&[2, 3, 3, 2, 3]).unwrap());
    let r: CfReport = parse(&stdout(&["eval", "2,4,1,3", "--json"]));
    assert_eq!(r.slope, q("19/42"));

    let r: DistanceReport = parse(&stdout(&["--json", "distance", "1/0", "3/10"]));
    assert_eq!((r.source, r.target, r.distance), (q("1/0"), q("3/10"), 3));

    let json = stdout(&["geodesics", "1/0", "79/182", "--json"]);
    let r: GeodesicsReport = parse(&json);
    let set = all_geodesics(&q("1/0"), &q("79/182"), &caps).unwrap();
    assert_eq!(GeodesicSet::from(r.clone()), set);
    assert!(!r.unique && r.count == set.paths.len());
    assert_eq!(serde_json::to_string(&Envelope::new(r)).unwrap() + "\n", json);

    let json = stdout(&["ladder", "1/0", "19/42", "--json"]);
    let r: LadderReport = parse(&json);
    let l = ladder(&q("1/0"), &q("19/42"), &caps).unwrap();
    assert_eq!(r, LadderReport::from(&l));
    assert_eq!(r.ladder_type, vec![2, 4, 1, 3]);
    assert_eq!(r.spine, Some(l.spine().unwrap()));
    assert!(json.contains(r#""type":[2,4,1,3]"#));

    let r: LadderReport = parse(&stdout(&["ladder", "1/0", "1/2", "--json"]));
    assert_eq!(r.spine, None);

    let r: SplittingReport = parse(&stdout(&["classify-2bridge", "182", "79", "--geodesics", "--json"]));
    let link = TwoBridgeLink::new(182, 79).unwrap();
    assert_eq!(r, classify_02(&link, &caps, true).unwrap());

    let r: SplittingReport = parse(&stdout(&["classify-03", "0/1", "3/1", "--json"]));
    let parts = vec![TwoBridgeLink::trivial_link(), TwoBridgeLink::new(3, 1).unwrap()];
    assert_eq!(r, classify_03(&CompositeLink::new(parts).unwrap()));

    let r: GenKeenReport = parse(&stdout(&["gen-keen", "4", "--entries", "3,4,5", "--json"]));
    assert_eq!(r.n, 4);
    assert_eq!(cf_eval(&r.cf), r.report.link.summands()[0].slope());
    assert!(r.report.strongly_keen);
    assert_eq!(r.report.geodesics.as_ref().map(Vec::len), Some(1));
}

#[test]
fn json_is_bit_exact_across_runs() {
    for args in [
        &["geodesics", "-2/5", "7/3", "--json"][..],
        &["ladder", "1/0", "79/182", "--json"],
        &["classify-2bridge", "68", "21", "--json", "--geodesics"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

fn count(hay: &str, needle: &str) -> usize {
    hay.matches(needle).count()
}

#[test]
fn svg_has_one_polygon_per_triangle_and_one_circle_per_pivot() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cases = vec![vec![2, 4, 1, 3], vec![2, 3, 3, 2, 3], vec![3, 3], vec![2], vec![7]];
    for _ in 0..40 {
        let len = rng.gen_range(1..7);
        let mut e: Vec<u64> = (0..len).map(|_| rng.gen_range(1..6)).collect();
        e[0] = e[0].max(2);
        if len > 1 && e[len - 1] == 1 {
            e[len - 1] = 2;
        }
        cases.push(e);
    }
    for entries in cases {
        let y = cf_eval(&ContinuedFraction::from_u64s(&entries).unwrap()).to_string();
        let svg = stdout(&["ladder", "1/0", &y, "--render", "svg"]);
        assert!(svg.starts_with("<svg ") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(count(&svg, "<polygon"), entries.iter().sum::<u64>() as usize, "{entries:?}");
        assert_eq!(count(&svg, "<circle"), entries.len(), "{entries:?}");
    }
}

#[test]
fn ascii_strip_lists_every_vertex() {
    let art = stdout(&["ladder", "1/0", "19/42", "--render", "ascii"]);
    let rows: Vec<&str> = art.lines().collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(count(&art, "*"), 4);
    assert_eq!(rows[3].split_whitespace().count(), 10);
    for v in ["1/0", "0/1*", "1/1", "5/11*", "19/42"] {
        assert!(art.contains(v), "{v}");
    }
}

#[test]
fn oracle_flag_reports_agreement() {
    let (code, out, err) = farey(&["--oracle", "geodesics", "-2/5", "7/3"]);
    assert_eq!(code, EXIT_OK);
    assert!(!out.is_empty());
    assert!(err.contains("oracle"));
    for args in [
        &["--oracle", "cf", "79/182"][..],
        &["--oracle", "eval", "2,3,3,2,3"],
        &["--oracle", "ladder", "1/0", "79/182"],
        &["--oracle", "classify-2bridge", "182", "79"],
        &["--oracle", "classify-03", "3/1", "5/2"],
        &["--oracle", "gen-keen", "5"],
    ] {
        assert_eq!(farey(args).0, EXIT_OK, "{args:?}");
    }
}

#[test]
fn oracle_flag_passes_on_the_q_200_corpus() {
    for den in 1..=200i64 {
        for num in 0..=den {
            let y = ExtendedRational::new(num, den).unwrap();
            if y.denom() != &den.into() {
                continue;
            }
            let s = y.to_string();
            let (code, _, err) = farey(&["--oracle", "geodesics", "1/0", &s]);
            assert_eq!(code, EXIT_OK, "{s}: {err}");
        }
    }
}
