//! Feature selection with the penalized mean conditional entropy.
//!
//! The label is the parity of three planted features plus 5% noise. UCS
//! searches the whole lattice; SFFS is shown for comparison.

use ucurve::cost::{planted_sample_table, SampleTable};
use ucurve::sffs::sffs_solve;
use ucurve::ucs::ucs_solve;
use ucurve::{CostEvaluator, CostFunction, ElementSet};

fn main() {
    let n = 12;
    let planted = ElementSet::from_indices([1, 4, 9], n);
    let table: SampleTable = planted_sample_table(n, 400, planted, 0.05, 3);
    println!("{} samples over {n} features, planted {planted}", table.len());
    println!("cost of planted subset: {:.4}", table.cost(planted));

    let ucs = ucs_solve(&mut CostEvaluator::new(&table), 0, 0.5);
    println!(
        "ucs : {} at {:.4} ({} nodes of {})",
        ucs.minima[0],
        ucs.best_cost.unwrap(),
        ucs.computed_nodes,
        1u64 << n
    );
    let sffs = sffs_solve(&mut CostEvaluator::new(&table));
    println!(
        "sffs: {} at {:.4} ({} nodes)",
        sffs.minima[0],
        sffs.best_cost.unwrap(),
        sffs.computed_nodes
    );

    // the text format round-trips
    let text = table.render();
    assert_eq!(SampleTable::parse(&text).unwrap(), table);
}
