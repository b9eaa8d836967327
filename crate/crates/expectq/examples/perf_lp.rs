use expectq::instances::one_hot_quadratic;
use expectq::nnl::{nnl_feasible, NnlOutcome};

fn main() {
    let n = 8usize;
    let f = one_hot_quadratic(n);
    let t0 = std::time::Instant::now();
    let out = nnl_feasible(&f, 6).unwrap();
    let tag = match out {
        NnlOutcome::Representation(_) => "feasible",
        NnlOutcome::Infeasible(_) => "infeasible",
    };
    println!("n={} d=6 {} elapsed={:?}", n, tag, t0.elapsed());
}
