//! One pass/fail line per acceptance criterion; exits non-zero on any failure.

use nicebase::reproduce::run_all;

fn main() {
    let results = run_all();
    let mut failed = 0;
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let timing = match r.limit {
            Some(l) => format!("{:.2} s, limit {} s", r.elapsed.as_secs_f64(), l.as_secs()),
            None => format!("{:.2} s", r.elapsed.as_secs_f64()),
        };
        println!("criterion {} [{status}] {} ({timing})", r.id, r.title);
        if !r.passed {
            failed += 1;
            for d in &r.detail {
                println!("    {d}");
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
