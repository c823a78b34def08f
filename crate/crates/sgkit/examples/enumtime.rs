use sgkit::set::ElementSet;
use sgkit::structure;
use sgkit::table::CayleyTable;

fn rect_band_subsets(t: &CayleyTable, e: usize) -> Vec<ElementSet> {
    t.universe()
        .subsets_containing(e)
        .filter(|s| {
            t.is_subsemigroup(s)
                && s.iter().all(|a| s.iter().all(|b| t.product(t.product(a, b), a) == a))
        })
        .collect()
}

fn main() {
    let started = std::time::Instant::now();
    let mut tables = 0u64;
    let mut rect_checked = 0u64;
    let mut rg_checked = 0u64;
    sgkit::enumerate::enumerate_semigroups(5, |t| {
        tables += 1;
        for e in structure::idempotents(t).iter() {
            let single = ElementSet::singleton(t.order(), e);
            // rect bands: unique admissible pair per product
            let found = rect_band_subsets(t, e);
            let enumerated = sgkit::factor::enumerate_rect_bands(t, e).unwrap();
            for target in &found {
                let matches = enumerated.iter().filter(|f| f.product == *target).count();
                assert_eq!(matches, 1);
                let f = enumerated.iter().find(|f| f.product == *target).unwrap();
                let te = t.product_sets(target, &single).unwrap();
                let et = t.product_sets(&single, target).unwrap();
                assert_eq!(f.left, te);
                assert_eq!(f.right, et);
                rect_checked += 1;
            }
            assert_eq!(found.len(), enumerated.len());
            // right groups: unique (H', RZ') pair per product
            let rsubs = sgkit::factor::enumerate_right_subgroups(t, e).unwrap();
            let mut products: Vec<Vec<usize>> = rsubs.iter().map(|f| f.product.to_vec()).collect();
            products.sort();
            products.dedup();
            assert_eq!(products.len(), rsubs.len());
            rg_checked += rsubs.len() as u64;
        }
    })
    .unwrap();
    println!(
        "order 5: {tables} tables, {rect_checked} rect bands, {rg_checked} right subgroups, {:?}",
        started.elapsed()
    );
}
