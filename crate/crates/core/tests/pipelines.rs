mod common;

use hamred_core::generate::{complete, medial, octahedron, prism};
use hamred_core::reductions::{pipeline_input, replay_trace, run_pipeline, Target};
use hamred_core::verify::{check_ham_cycle, check_plane, check_regular};
use hamred_core::{digest, parse_instance, serialize_instance, Budget, Error, Instance, ReductionTrace};

#[test]
fn every_medial_instance_hamiltonizes() {
    let b = Budget::default();
    for (name, pg) in common::medial_instances() {
        let (out, trace) = run_pipeline(&Instance::from_plane(pg.clone()), Target::FourRegPlanarHam, &b)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        let out_pg = out.plane().unwrap();
        assert!(check_plane(out_pg).unwrap(), "{name}");
        assert!(check_regular(out_pg.graph(), 4), "{name}");
        assert!(check_ham_cycle(out_pg.graph(), out.cycle.as_ref().unwrap()), "{name}");
        assert!(trace.count("merge_two_factor_step") <= pg.n() / 3, "{name}");
    }
}

#[test]
fn five_regular_chain_on_odd_and_even_hosts() {
    let b = Budget::default();
    for pg in [octahedron(), medial(&prism(3).unwrap()).unwrap(), medial(&prism(5).unwrap()).unwrap()] {
        let (out, trace) = run_pipeline(&Instance::from_plane(pg.clone()), Target::FiveRegPlanarHam, &b).unwrap();
        let g = out.graph();
        assert!(check_regular(g, 5));
        assert!(check_plane(out.plane().unwrap()).unwrap());
        assert!(check_ham_cycle(g, out.cycle.as_ref().unwrap()));
        let evenized = trace.steps.iter().find(|s| s.op == "evenize").unwrap();
        assert_eq!(evenized.params["edge"].is_null(), pg.n() % 2 == 0);
    }
}

#[test]
fn traces_replay_through_json() {
    let b = Budget::default();
    let cases = [
        (Instance::from_plane(medial(&prism(4).unwrap()).unwrap()), Target::FiveRegPlanarHam),
        (Instance::from_graph(complete(4)), Target::PRegHam { p: 6 }),
        (Instance::from_graph(complete(5)), Target::Ordered { p: 4 }),
    ];
    for (inst, target) in cases {
        let (out, trace) = run_pipeline(&inst, target, &b).unwrap();
        let back = ReductionTrace::from_json(&trace.to_json()).unwrap();
        assert_eq!(back, trace);
        let replayed = replay_trace(&inst, &back, &b).unwrap();
        assert_eq!(serialize_instance(&replayed), serialize_instance(&out));
        assert_eq!(digest(&replayed), trace.output_digest);
    }
}

#[test]
fn replay_rejects_other_inputs_and_tampering() {
    let b = Budget::default();
    let inst = Instance::from_plane(medial(&prism(4).unwrap()).unwrap());
    let (_, trace) = run_pipeline(&inst, Target::FourRegPlanarHam, &b).unwrap();
    let other = Instance::from_plane(medial(&prism(5).unwrap()).unwrap());
    assert!(matches!(replay_trace(&other, &trace, &b), Err(Error::ReplayMismatch { step: 0, .. })));

    let mut tampered = trace.clone();
    let merge = tampered.steps.iter().position(|s| s.op == "merge_two_factor_step").unwrap();
    tampered.steps[merge].params["cross_edge"] = serde_json::json!([0, 0]);
    assert!(matches!(
        replay_trace(&inst, &tampered, &b),
        Err(Error::ReplayMismatch { step, .. }) if step == merge + 1
    ));
}

#[test]
fn labels_and_colours_do_not_reach_the_trace() {
    let b = Budget::default();
    let pg = octahedron();
    let mut text = serialize_instance(&Instance::from_plane(pg));
    text.push_str("label apex 0\nc 0 1\n");
    let inst = parse_instance(&text).unwrap();
    let (_, t1) = run_pipeline(&inst, Target::FourRegPlanarHam, &b).unwrap();
    let (_, t2) = run_pipeline(&pipeline_input(&inst), Target::FourRegPlanarHam, &b).unwrap();
    assert_eq!(t1, t2);
}

#[test]
fn pipelines_refuse_wrong_inputs() {
    let b = Budget::default();
    let k5 = Instance::from_graph(complete(5));
    assert!(run_pipeline(&k5, Target::FourRegPlanarHam, &b).is_err());
    let err = run_pipeline(&k5, Target::Ordered { p: 5 }, &b).unwrap_err();
    assert_eq!(err.exit_code(), 2);
    let tiny = Budget { build: 100, ..b };
    let err = run_pipeline(&k5, Target::Ordered { p: 4 }, &tiny).unwrap_err();
    assert!(matches!(err, Error::ScheduleRefused { step: 1, .. }));
}

#[test]
fn every_medial_instance_reaches_even_order() {
    let b = Budget::default();
    for (name, pg) in common::medial_instances() {
        let (out, _) = run_pipeline(&Instance::from_plane(pg.clone()), Target::EvenFourRegPlanarHam, &b)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        let g = out.graph();
        assert_eq!(g.n() % 2, 0, "{name}");
        assert!(check_regular(g, 4), "{name}");
        assert!(check_plane(out.plane().unwrap()).unwrap(), "{name}");
        assert!(check_ham_cycle(g, out.cycle.as_ref().unwrap()), "{name}");
    }
}
