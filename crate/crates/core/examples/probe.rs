use curviso::codes::*;

// enumerate all valid codes with n crossings, bucket by equivalence class size
fn main() {
    for n in [2usize, 3] {
        let len = 2 * n;
        // enumerate involutions with parity + all sign choices
        let mut twins = Vec::new();
        fn gen(twin: &mut Vec<Option<usize>>, twins: &mut Vec<Vec<usize>>) {
            if let Some(i) = twin.iter().position(|t| t.is_none()) {
                let len = twin.len();
                for j in i + 1..len {
                    if twin[j].is_none() && (j + i) % 2 == 1 {
                        twin[i] = Some(j);
                        twin[j] = Some(i);
                        gen(twin, twins);
                        twin[i] = None;
                        twin[j] = None;
                    }
                }
            } else {
                twins.push(twin.iter().map(|t| t.unwrap()).collect());
            }
        }
        gen(&mut vec![None; len], &mut twins);
        let mut counts = std::collections::BTreeMap::new();
        for tw in &twins {
            for bits in 0..(1u32 << n) {
                let mut sign = vec![0i8; len];
                let mut k = 0;
                for i in 0..len {
                    if tw[i] > i {
                        let s: i8 = if bits >> k & 1 == 1 { 1 } else { -1 };
                        sign[i] = s;
                        sign[tw[i]] = -s;
                        k += 1;
                    }
                }
                let code = SignedCrossingCode::from_one_based(
                    tw.iter().map(|t| t + 1).collect(),
                    sign,
                )
                .unwrap();
                if validate(&code).is_valid() {
                    let eq = equivalent_codes(&code).unwrap();
                    let entry = counts.entry(eq.len()).or_insert((0usize, None));
                    entry.0 += 1;
                    if entry.1.is_none() {
                        entry.1 = Some(code.clone());
                    }
                }
            }
        }
        println!("n={}:", n);
        for (size, (count, example)) in &counts {
            println!("  |equiv|={}: {} codes, e.g. {:?}", size, count, example.as_ref().unwrap());
        }
    }
}
