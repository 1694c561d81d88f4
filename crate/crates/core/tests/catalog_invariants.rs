//! Structural invariants of the bundled catalog: every group-level and
//! spectrum-level property that must hold for each committed entry.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use ordertype::catalog::{build_group, Catalog, GroupDescriptor, Side};
use ordertype::perm::Permutation;
use ordertype::spectra::{group_exponent, ExponentSpectrum, OrderSpectrum};
use ordertype::{FiniteGroup, ValuationVector};

fn bundled() -> Catalog {
    Catalog::bundled()
}

fn build(entry: &GroupDescriptor) -> FiniteGroup {
    build_group(entry).unwrap()
}

#[test]
fn element_orders_divide_group_order() {
    for entry in bundled().entries() {
        let group = build(entry);
        let order = group.order();
        for element in group.elements() {
            assert_eq!(order % element.order(), 0, "{} in {}", element.order(), entry.name);
        }
    }
}

#[test]
fn enumeration_ignores_generator_order() {
    for entry in bundled().entries() {
        if entry.generators.len() < 2 {
            continue;
        }
        let mut generators: Vec<Permutation> = entry
            .generators
            .iter()
            .map(|im| Permutation::from_images(im.clone()).unwrap())
            .collect();
        let forward = FiniteGroup::enumerate(&generators).unwrap();
        generators.reverse();
        let reversed = FiniteGroup::enumerate(&generators).unwrap();
        assert_eq!(forward.elements(), reversed.elements(), "{}", entry.name);
    }
}

#[test]
fn solvability_is_multiplicative_on_random_pairs() {
    let catalog = bundled();
    let entries = catalog.entries();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 10 {
        let a = &entries[rng.gen_range(0..entries.len())];
        let b = &entries[rng.gen_range(0..entries.len())];
        if a.id.order() * b.id.order() > 10_000 {
            continue;
        }
        let product = build(a).direct_product(&build(b));
        assert_eq!(
            product.is_solvable(),
            a.solvable && b.solvable,
            "{} x {}",
            a.name,
            b.name
        );
        checked += 1;
    }
}

#[test]
fn no_table_group_is_a_direct_product() {
    for entry in bundled().entries() {
        if entry.side == Side::Aux {
            continue;
        }
        let group = build(entry);
        assert!(
            !group.is_direct_product().unwrap(),
            "{} decomposes",
            entry.name
        );
    }
}

#[test]
fn normal_subgroups_are_conjugation_invariant() {
    // spot-check a structurally varied sample, including the largest entries
    let catalog = bundled();
    for selector in ["C_24:C_2", "C_7:A_4", "GL(3,2)", "C_7:D_24", "D_12.D_7"] {
        let entry = catalog.find(selector).unwrap();
        let group = build(entry);
        for subgroup in group.normal_subgroups().unwrap() {
            for generator in group.generators() {
                for element in subgroup.elements() {
                    let conjugate = generator
                        .compose(element)
                        .unwrap()
                        .compose(&generator.inverse())
                        .unwrap();
                    assert!(subgroup.contains(&conjugate), "{selector}");
                }
            }
        }
    }
}

#[test]
fn spectra_are_monotone_and_sum_to_group_order() {
    for entry in bundled().entries() {
        let group = build(entry);
        let orders = OrderSpectrum::of_group(&group);
        assert_eq!(orders.total(), group.order(), "{}", entry.name);
        let spectrum = ExponentSpectrum::from_order_spectrum(&orders);
        assert_eq!(spectrum.eval(spectrum.exponent()), group.order());
        assert_eq!(spectrum.exponent(), group_exponent(&group));
        for (&n, &en) in spectrum.values() {
            for (&m, &em) in spectrum.values() {
                if m % n == 0 {
                    assert!(en <= em, "{}: e({n}) > e({m})", entry.name);
                }
            }
        }
    }
}

#[test]
fn spot_values_of_well_known_groups() {
    let catalog = bundled();
    let gl32 = build(catalog.find("GL(3,2)").unwrap());
    assert_eq!(OrderSpectrum::of_group(&gl32).count(2), 21);
    assert_eq!(group_exponent(&gl32), 84);

    let sl23 = build(catalog.find("SL(2,3)").unwrap());
    let spectrum = ExponentSpectrum::of_group(&sl23);
    assert_eq!(spectrum.eval(6), 18);
    assert_eq!(group_exponent(&sl23), 12);

    let d12d7 = build(catalog.find("D_12.D_7").unwrap());
    assert_eq!(group_exponent(&d12d7), 168);
}

#[test]
fn valuations_add_across_products_and_powers() {
    let catalog = bundled();
    let sl23 = build(catalog.find("SL(2,3)").unwrap());
    let d7 = build(catalog.find("D_7").unwrap());
    let c4 = build(catalog.find("C_4").unwrap());

    let vector = |g: &FiniteGroup| ValuationVector::of_spectrum(&ExponentSpectrum::of_group(g));

    let pair = sl23.direct_product(&d7);
    let mut expected = vector(&sl23);
    expected.add_scaled(&vector(&d7), 1);
    assert_eq!(vector(&pair), expected);

    // C_4^2 × D_7: the vector is the multiplicity-weighted combination
    let power = c4.direct_product(&c4).direct_product(&d7);
    let mut expected = ValuationVector::default();
    expected.add_scaled(&vector(&c4), 2);
    expected.add_scaled(&vector(&d7), 1);
    assert_eq!(vector(&power), expected);
}

#[test]
fn catalog_round_trips_through_serialization() {
    let catalog = bundled();
    let json = serde_json::to_string(&serde_json::json!({ "entries": catalog.entries() })).unwrap();
    let reloaded = Catalog::parse(&json).unwrap();
    assert_eq!(reloaded.entries(), catalog.entries());
}
