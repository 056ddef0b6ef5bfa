// The subfamily condition on blocks versus SH idempotence, under both
// readings of the quantifier over K.

use rough_matroid::verify::{zhu_audit, Reading};
use rough_matroid::{make_covering, Universe};

pub fn run_example() -> rough_matroid::Result<()> {
    let abc = Universe::new(["a", "b", "c"])?;
    let ab = Universe::new(["a", "b"])?;
    let coverings = [
        make_covering(&abc, &[vec!["a", "b"], vec!["a", "c"]])?,
        make_covering(&abc, &[vec!["a", "b"], vec!["c"]])?,
        make_covering(&ab, &[vec!["a"], vec!["a", "b"]])?,
    ];
    for c in &coverings {
        let record = zhu_audit(c)?;
        println!(
            "{}: SH idempotent={}",
            record.covering, record.sh_idempotent
        );
        for reading in Reading::BOTH {
            let r = record.reading(reading);
            println!(
                "  {reading} ({}): condition={} {:?}{}",
                reading.describe(),
                r.condition,
                r.classification,
                r.witness
                    .as_deref()
                    .map(|w| format!(", violated by {w}"))
                    .unwrap_or_default()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("subfamily audit example");
}
