use super::*;
use crate::error::Error;
use crate::homalg::Verdict;
use proptest::prelude::*;

fn run(text: &str) -> JobReport {
    run_job(&parse_job(text).unwrap(), &RunOptions::default()).unwrap()
}

fn result_scalar<'a>(rep: &'a JobReport, key: &str) -> &'a str {
    rep.canonical.get("result").unwrap().get(key).unwrap().as_scalar().unwrap()
}

#[test]
fn minimal_job() {
    let j = parse_job("ring: {p: 101, vars: [x, y]}\ncommand: grade\nmodule: k\n").unwrap();
    assert_eq!(j.command, Command::Grade);
    assert_eq!(j.ring.characteristic, 101);
    assert_eq!(j.params.module.as_deref(), Some("k"));
    let rep = run_job(&j, &RunOptions::default()).unwrap();
    assert_eq!(result_scalar(&rep, "grade"), "2");
    assert!(rep.succeeded());
}

#[test]
fn build_job() {
    let text = "ring: {char: 101, vars: [x, y, z]}\ncommand: build\nN: k\ncs: [2, 1]\ngldim_end_N: 0\n";
    let j = parse_job(text).unwrap();
    assert_eq!(j.params.cs, Some(vec![2, 1]));
    let rep = run("ring: {char: 101, vars: [x, y]}\ncommand: build\nN: k\ncs: [1]\ngldim_end_N: 0\n");
    assert_eq!(result_scalar(&rep, "bound"), "5");
    assert!(rep.verdicts.iter().all(|(_, v)| *v == Verdict::Verified));
    assert!(rep.succeeded());
}

#[test]
fn validation_errors_name_their_location() {
    let cases = [
        ("ring: {char: 101, vars: [x, x]}\ncommand: grade\nmodule: k\n", "ring"),
        ("ring: {char: 100, vars: [x]}\ncommand: grade\nmodule: k\n", "ring"),
        ("ring: {char: 101, vars: [x]}\ncommand: frobnicate\n", "command"),
        ("ring: {char: 101, vars: [x]}\ncommand: grade\nmodule: q\n", "module"),
        (
            "ring: {char: 101, vars: [x, y]}\nmodule a: {gens: [0], relations: [[x + y^2]]}\ncommand: grade\nmodule: a\n",
            "module a.relations",
        ),
        (
            "ring: {char: 101, vars: [x, y]}\nmodule a: {gens: [0], relations: [[w]]}\ncommand: grade\nmodule: a\n",
            "module a.relations[0][0]",
        ),
        ("ring: {char: 101, vars: [x, y]}\ncommand: build\nN: k\ncs: [2]\n", "cs"),
        ("ring: {char: 101, vars: [x, y]}\ncommand: syzygy\nmodule: k\n", "c"),
        (
            "ring: {char: 101, vars: [x]}\nmodule a: {syzygy: b, c: 1}\nmodule b: {syzygy: a, c: 1}\ncommand: grade\nmodule: a\n",
            "module",
        ),
    ];
    for (text, loc) in cases {
        match parse_job(text) {
            Err(Error::Job { location, .. }) => assert!(location.starts_with(loc), "{text}: {location}"),
            other => panic!("{text}: expected a job error, got {other:?}"),
        }
    }
    let e = parse_job("ring: {char: 101, vars: [x, x]}\ncommand: grade\nmodule: k\n").unwrap_err();
    assert!(e.to_string().contains("duplicate variable"));
    assert!(matches!(parse_job("ring: {char: 101\n"), Err(Error::Job { .. })));
}

#[test]
fn pure_commands() {
    let base = "ring: {char: 101, vars: [x, y]}\nmodule m: {syzygy: k, c: 1}\n";
    let rep = run(&format!("{base}command: torsionfree\nmodule: m\nd: 2\n"));
    let tf = rep.canonical.get("result").unwrap();
    assert_eq!(tf.get("torsionfree").unwrap().as_scalar(), Some("false"));
    assert!(rep.succeeded());

    let rep = run(&format!("{base}command: hom\nsource: m\ntarget: m\n"));
    let hom = rep.canonical.get("result").unwrap().get("hom").unwrap();
    assert_eq!(hom.get("k_dimension").unwrap().as_scalar(), Some("infinite"));

    let rep = run(&format!("{base}command: ext\ni: 2\nsource: k\ntarget: R\n"));
    let e = rep.canonical.get("result").unwrap().get("ext").unwrap();
    assert_eq!(e.get("k_dimension").unwrap().as_scalar(), Some("1"));

    let rep = run(&format!("{base}command: stablehom\nsource: m\ntarget: m\n"));
    assert_eq!(result_scalar(&rep, "is_zero"), "false");

    run(&format!("{base}command: transpose\nmodule: m\n"));
    run(&format!("{base}command: syzygy\nmodule: k\nc: 2\n"));
}

#[test]
fn verification_commands() {
    let base = "ring: {char: 101, vars: [x, y]}\nM: R\nX: k\nc: 1\n";
    let rep = run(&format!("{base}command: verify-claim1\n"));
    assert!(rep.succeeded());
    let rep = run(&format!("{base}command: verify-exact2\ndepth: 3\n"));
    assert!(rep.succeeded());
    let rep = run("ring: {char: 101, vars: [x, y]}\nM: R\nX: k\nc: 2\ncommand: verify-claim1\n");
    assert_eq!(rep.verdicts[0].1, Verdict::HypothesisFailed);
    assert!(!rep.succeeded());
}

#[test]
fn reports_are_deterministic() {
    let text = "ring: {char: 101, vars: [x, y]}\ncommand: verify-lemmas\ncount: 5\n";
    let a = run(text);
    let b = run(text);
    assert_eq!(a.canonical.to_document(), b.canonical.to_document());
    assert!(a.summary().contains("status: ok"));
}

fn job_strategy() -> impl Strategy<Value = JobSpec> {
    let ring = (prop::sample::select(vec![2u64, 3, 101, 32003]), 1usize..4, any::<bool>()).prop_map(|(p, n, lex)| {
        RingSpec {
            characteristic: p,
            vars: ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect(),
            order: if lex { crate::MonomialOrder::Lex } else { crate::MonomialOrder::Grevlex },
        }
    });
    let params = (
        prop::option::of(prop::sample::select(vec!["R", "k", "a"])),
        prop::option::of(0i32..3),
        prop::option::of(prop::collection::vec(0i32..1, 0..3)),
        prop::option::of(1usize..6),
        prop::option::of(0u32..4),
    );
    (ring, params, any::<bool>()).prop_map(|(ring, (module, c, cs, depth, g), syz)| {
        let mut modules = std::collections::BTreeMap::new();
        modules.insert(
            "a".to_string(),
            if syz {
                ModuleSpec::Syzygy { of: "k".into(), c: 1 }
            } else {
                ModuleSpec::Presented {
                    gens: vec![0, 1],
                    relations: vec![vec!["x".into(), "x^2".into()], vec!["0".into(), "x".into()]],
                }
            },
        );
        JobSpec {
            ring,
            modules,
            command: Command::Grade,
            params: Params {
                module: Some(module.unwrap_or("k").to_string()),
                c,
                cs,
                depth,
                gldim_end_n: g,
                ..Params::default()
            },
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn job_round_trip(job in job_strategy()) {
        let text = job.to_document();
        prop_assert_eq!(parse_job(&text).unwrap(), job);
    }
}
