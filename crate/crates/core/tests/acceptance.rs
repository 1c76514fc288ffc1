//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hamred_core::generate::{complete, medial, octahedron, prism, triangle};
use hamred_core::reductions::{
    evenize, hamiltonize_4reg_planar, lift_qcomplete_cycle, order_pipeline, order_target_q,
    q_complete, regularize_5, run_pipeline, stack_increment, Target,
};
use hamred_core::solvers::{
    enumerate_colorings, hamiltonian_cycle, three_color, two_factor, vertex_connectivity,
};
use hamred_core::verify::{
    brute_force_connectivity, check_equiv_small, check_ham_cycle, check_plane, check_regular,
    check_two_factor,
};
use hamred_core::{
    builtin_contract, builtin_gadget, serialize_instance, Budget, CycleCert, Error, GadgetName,
    Graph, Instance,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1(budget: &Budget) -> Outcome {
    let start = Instant::now();
    for name in GadgetName::ALL {
        let report = hamred_core::verify_gadget(&builtin_gadget(name), &builtin_contract(name), budget)
            .map_err(|e| format!("{name}: {e}"))?;
        ensure(report.passed(), || format!("{name}:\n{report}"))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("all five gadgets verified in {:.2}s", t.as_secs_f64()))
}

fn ac2() -> Outcome {
    let instances = common::medial_instances();
    let mut worst = Duration::ZERO;
    for (name, pg) in &instances {
        let n = pg.n();
        ensure(n <= 60, || format!("{name} has {n} vertices"))?;
        let start = Instant::now();
        let (out, c, trace) = hamiltonize_4reg_planar(pg).map_err(|e| format!("{name}: {e}"))?;
        let t = start.elapsed();
        worst = worst.max(t);
        let g = out.graph();
        ensure(check_regular(g, 4), || format!("{name}: not 4-regular"))?;
        ensure(check_plane(&out).unwrap_or(false), || format!("{name}: not plane"))?;
        ensure(check_ham_cycle(g, &c), || format!("{name}: bad cycle"))?;
        let merges = trace.count("merge_two_factor_step");
        ensure(merges <= n / 3, || format!("{name}: {merges} merges > n/3"))?;
        ensure(t < Duration::from_secs(10), || format!("{name}: took {t:?}"))?;
    }
    ensure(instances.len() >= 20, || format!("only {} instances", instances.len()))?;
    Ok(format!(
        "{} medial instances, slowest {:.3}s",
        instances.len(),
        worst.as_secs_f64()
    ))
}

fn ac3(budget: &Budget) -> Outcome {
    let mut checked = 0;
    let mut compositional = 0;
    let mut agree = |name: &str, stage: &str, g: &Graph, h: &Graph| -> Result<(), String> {
        match check_equiv_small(g, h, budget) {
            Ok(true) => {
                checked += 1;
                Ok(())
            }
            Ok(false) => Err(format!("{name}: {stage} changes colourability")),
            Err(e) if e.is_refusal() => {
                compositional += 1;
                Ok(())
            }
            Err(e) => Err(format!("{name}: {stage}: {e}")),
        }
    };
    for (name, pg) in common::small_hosts() {
        let g = pg.graph();
        let (h, c, _) = hamiltonize_4reg_planar(&pg).map_err(|e| format!("{name}: {e}"))?;
        agree(&name, "hamiltonize", g, h.graph())?;
        let ev = evenize(&h, &c).map_err(|e| format!("{name}: {e}"))?;
        agree(&name, "evenize", g, ev.plane.graph())?;
        let (five, c5) = regularize_5(&ev.plane, &ev.cycle).map_err(|e| format!("{name}: {e}"))?;
        agree(&name, "regularize_5", g, five.graph())?;
        let (st, _) = stack_increment(five.graph(), &c5).map_err(|e| format!("{name}: {e}"))?;
        agree(&name, "stack_increment", g, &st)?;
        // exhaustive search only runs on the smaller hosts
        if let Ok(Some(base)) = hamiltonian_cycle(g, budget) {
            let (st, _) = stack_increment(g, &base).map_err(|e| format!("{name}: {e}"))?;
            agree(&name, "stack_increment on host", g, &st)?;
        }
        let qc = q_complete(g, 2, budget).map_err(|e| e.to_string())?;
        agree(&name, "q_complete(2)", g, &qc.graph)?;
    }
    ensure(checked > 0, || "nothing fit the oracle".into())?;
    Ok(format!(
        "{checked} stage outputs agree with their host; {compositional} over the oracle cap \
         rest on the gadget checks"
    ))
}

fn ac4() -> Outcome {
    let b = Budget::default();
    let pg = medial(&prism(3).unwrap()).unwrap();
    ensure(pg.n() == 9, || format!("host has {} vertices", pg.n()))?;
    let c = hamiltonian_cycle(pg.graph(), &b).map_err(|e| e.to_string())?.ok_or("host not Hamiltonian")?;
    let ev = evenize(&pg, &c).map_err(|e| e.to_string())?;
    let g = ev.plane.graph();
    ensure(g.n() == 44, || format!("evenized graph has {} vertices", g.n()))?;
    ensure(check_regular(g, 4), || "evenized graph not 4-regular".into())?;
    ensure(check_plane(&ev.plane).unwrap_or(false), || "evenized graph not plane".into())?;
    ensure(check_ham_cycle(g, &ev.cycle), || "evenized cycle invalid".into())?;

    let oct = octahedron();
    let c = hamiltonian_cycle(oct.graph(), &b).map_err(|e| e.to_string())?.ok_or("no cycle")?;
    let (five, c5) = regularize_5(&oct, &c).map_err(|e| e.to_string())?;
    ensure(check_regular(five.graph(), 5), || "not 5-regular".into())?;
    ensure(check_plane(&five).unwrap_or(false), || "5-regular graph not plane".into())?;
    ensure(check_ham_cycle(five.graph(), &c5), || "5-regular cycle invalid".into())?;
    Ok(format!("evenize 9 -> 44, regularize_5 6 -> {}", five.n()))
}

fn ac5() -> Outcome {
    let k4 = complete(4);
    let (s, star) = stack_increment(&k4, &CycleCert(vec![0, 1, 2, 3])).map_err(|e| e.to_string())?;
    ensure(s.n() == 8 && check_regular(&s, 4), || "K4 stack is not 4-regular on 8".into())?;
    ensure(check_ham_cycle(&s, &star), || "K4 stack cycle invalid".into())?;
    ensure(three_color(&s).is_none(), || "K4 stack is 3-colourable".into())?;
    let (t, c) = triangle();
    let (s, star) = stack_increment(&t, &c).map_err(|e| e.to_string())?;
    ensure(check_regular(&s, 3) && s.n() == 6, || "triangle stack is not 3-regular on 6".into())?;
    ensure(check_ham_cycle(&s, &star), || "triangle stack cycle invalid".into())?;
    ensure(three_color(&s).is_some(), || "triangle stack not 3-colourable".into())?;
    Ok("K4 stack uncolourable, triangle stack colourable".into())
}

fn ac6(budget: &Budget) -> Outcome {
    let k3 = complete(3);
    let c2 = q_complete(&k3, 2, budget).map_err(|e| e.to_string())?;
    let g = &c2.graph;
    ensure(g.n() == 6 && g.m() == 12 && check_regular(g, 4), || "C_2(K3) shape".into())?;
    ensure(three_color(g).is_some(), || "C_2(K3) not 3-colourable".into())?;
    let oct = octahedron();
    ensure(
        vertex_connectivity(g) == vertex_connectivity(oct.graph()),
        || "C_2(K3) and octahedron differ in connectivity".into(),
    )?;
    let lifted = lift_qcomplete_cycle(&CycleCert(vec![0, 1, 2]), 2, &c2).map_err(|e| e.to_string())?;
    ensure(check_ham_cycle(g, &lifted), || "lifted cycle invalid".into())?;

    let qs: Vec<usize> = [3, 4, 23].iter().map(|&p| order_target_q(p).unwrap()).collect();
    ensure(qs == [44, 37, 24], || format!("order_target_q gave {qs:?}"))?;

    let k5 = complete(5);
    let c3 = q_complete(&k5, 3, budget).map_err(|e| e.to_string())?;
    let kappa = vertex_connectivity(&c3.graph);
    ensure(kappa >= 9, || format!("connectivity of C_3(K5) is {kappa}"))?;

    let cyc = CycleCert(vec![0, 1, 2, 3, 4]);
    match order_pipeline(&k5, &cyc, 5, budget) {
        Err(e @ Error::ScheduleRefused { .. }) => {
            let Error::ScheduleRefused { schedule, .. } = &e else { unreachable!() };
            ensure(schedule[..2] == [44, 37], || format!("schedule {schedule:?}"))?;
            ensure(e.exit_code() == 2, || "refusal exit code is not 2".into())?;
        }
        other => return Err(format!("order_pipeline to p=5 did not refuse: {other:?}")),
    }
    Ok(format!("q = 44, 37, 24; connectivity of C_3(K5) = {kappa}; p=5 refused with [44, 37]"))
}

fn ac7(budget: &Budget) -> Outcome {
    let mut counts = [0usize; 3];
    for (name, g) in common::corpus() {
        if g.n() <= 12 {
            let fast = three_color(&g).is_some();
            let mut all = enumerate_colorings(&g, &vec![None; g.n()], budget)
                .map_err(|e| format!("{name}: {e}"))?;
            ensure(fast == all.next().is_some(), || format!("{name}: colouring oracles disagree"))?;
            counts[0] += 1;
        }
        if g.n() <= 9 {
            let flow = vertex_connectivity(&g);
            let brute = brute_force_connectivity(&g, budget).map_err(|e| format!("{name}: {e}"))?;
            ensure(flow == brute, || format!("{name}: connectivity {flow} vs {brute}"))?;
            counts[1] += 1;
        }
        if g.regular_degree() == Some(4) && g.is_connected() {
            let tf = two_factor(&g).map_err(|e| format!("{name}: {e}"))?;
            ensure(check_two_factor(&g, &tf), || format!("{name}: bad 2-factor"))?;
            counts[2] += 1;
        }
    }
    Ok(format!(
        "{} colouring, {} connectivity and {} 2-factor cross-checks",
        counts[0], counts[1], counts[2]
    ))
}

fn ac8(budget: &Budget) -> Outcome {
    let mut runs = 0;
    let inputs: Vec<(Instance, Target)> = common::small_hosts()
        .into_iter()
        .flat_map(|(_, pg)| {
            [
                Target::FourRegPlanarHam,
                Target::EvenFourRegPlanarHam,
                Target::FiveRegPlanarHam,
            ]
            .map(|t| (Instance::from_plane(pg.clone()), t))
        })
        .chain([
            (Instance::from_graph(complete(4)), Target::PRegHam { p: 6 }),
            (Instance::from_graph(complete(5)), Target::Ordered { p: 4 }),
            (Instance::from_graph(complete(5)), Target::Ordered { p: 3 }),
        ])
        .collect();
    for (inst, target) in inputs {
        let (a, ta) = run_pipeline(&inst, target, budget).map_err(|e| format!("{target}: {e}"))?;
        let (b, tb) = run_pipeline(&inst, target, budget).map_err(|e| format!("{target}: {e}"))?;
        ensure(serialize_instance(&a) == serialize_instance(&b), || {
            format!("{target}: outputs differ")
        })?;
        ensure(ta.digest() == tb.digest(), || format!("{target}: traces differ"))?;
        runs += 1;
    }
    Ok(format!("{runs} pipelines reproduced byte for byte"))
}

fn main() -> ExitCode {
    let budget = Budget::default();
    let criteria: [(&str, &dyn Fn() -> Outcome); 8] = [
        ("AC1 gadget contracts", &|| ac1(&budget)),
        ("AC2 hamiltonization", &ac2),
        ("AC3 colourability equivalence", &|| ac3(&budget)),
        ("AC4 even and 5-regular chain", &ac4),
        ("AC5 stacking", &ac5),
        ("AC6 q-complete", &|| ac6(&budget)),
        ("AC7 oracle cross-checks", &|| ac7(&budget)),
        ("AC8 determinism", &|| ac8(&budget)),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
