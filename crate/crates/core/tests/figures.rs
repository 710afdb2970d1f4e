mod common;

use std::collections::BTreeSet;

use magogkit::grid::{validate_corner_sum, validate_fpl, validate_fpl_local, validate_height_function};
use magogkit::{
    corner_to_height, corner_to_matrix, fpl_to_vertex, height_to_fpl, CornerSumMatrix, Edge, Family,
    HeightFunctionMatrix, Location, ViolationKind,
};

use common::{edges, grid, CORNER_SUMS, FPLS, HEIGHTS};

#[test]
fn drawn_objects_are_valid() {
    for k in 0..7 {
        assert!(validate_corner_sum(&grid(&CORNER_SUMS[k]), Family::Magog).unwrap().is_valid(), "corner sum {k}");
        assert!(validate_height_function(&grid(&HEIGHTS[k]), Family::Magog).unwrap().is_valid(), "height {k}");
        assert!(validate_fpl_local(3, &edges(FPLS[k]), Family::Magog).unwrap().is_valid(), "fpl {k}");
        assert!(validate_fpl(3, &edges(FPLS[k]), Family::Magog).unwrap().is_valid(), "fpl {k}");
    }
}

#[test]
fn figures_correspond_in_order() {
    for k in 0..7 {
        let c = CornerSumMatrix::new(&grid(&CORNER_SUMS[k]), Family::Magog).unwrap();
        let h = corner_to_height(&c).unwrap();
        assert_eq!(h.cells(), grid(&HEIGHTS[k]), "height {k}");
        let f = height_to_fpl(&h).unwrap();
        let mut drawn = edges(FPLS[k]);
        drawn.sort();
        assert_eq!(f.edges(), drawn, "fpl {k}");
        assert!(fpl_to_vertex(&f).is_ok());
    }
}

#[test]
fn first_and_last_corner_sums_come_from_anti_diagonal_and_identity() {
    let first = CornerSumMatrix::new(&grid(&CORNER_SUMS[0]), Family::Magog).unwrap();
    let last = CornerSumMatrix::new(&grid(&CORNER_SUMS[6]), Family::Magog).unwrap();
    assert_eq!(corner_to_matrix(&first).unwrap().matrix().rows(), vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    assert_eq!(corner_to_matrix(&last).unwrap().matrix().rows(), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
}

#[test]
fn figure_sets_are_distinct() {
    let c: BTreeSet<_> = CORNER_SUMS.iter().collect();
    let h: BTreeSet<_> = HEIGHTS.iter().collect();
    let f: BTreeSet<_> = FPLS.iter().collect();
    assert_eq!((c.len(), h.len(), f.len()), (7, 7, 7));
}

#[test]
fn corner_sum_of_132_fails_special_inequality() {
    let c = vec![vec![0, 0, 0, 0], vec![0, 1, 1, 1], vec![0, 1, 1, 2], vec![0, 1, 2, 3]];
    let v = validate_corner_sum(&c, Family::Magog).unwrap();
    assert_eq!(v.violations().len(), 1);
    assert_eq!(v.violations()[0].kind, ViolationKind::SpecialInequality);
    assert_eq!(v.violations()[0].at, Location::Cell(1, 1));
    assert!(validate_corner_sum(&c, Family::Asm).unwrap().is_valid());
}

#[test]
fn height_outside_the_figure_fails_special_inequality() {
    let h = vec![vec![0, 1, 2, 3], vec![1, 0, 1, 2], vec![2, 1, 2, 1], vec![3, 2, 1, 0]];
    let v = validate_height_function(&h, Family::Magog).unwrap();
    assert!(v.has(ViolationKind::SpecialInequality));
    assert!(HeightFunctionMatrix::new(&h, Family::Magog).is_err());
}

#[test]
fn deleting_a_boundary_edge_is_a_boundary_violation() {
    for fig in FPLS {
        let all = edges(fig);
        for (k, e) in all.iter().enumerate() {
            let boundary = [e.first(), e.second()]
                .iter()
                .any(|v| v.row == 0 || v.col == 0 || v.row == 4 || v.col == 4);
            if !boundary {
                continue;
            }
            let mut fewer = all.clone();
            fewer.remove(k);
            let v = validate_fpl(3, &fewer, Family::Magog).unwrap();
            assert!(v.has(ViolationKind::Boundary), "removed {e}");
        }
    }
}

#[test]
fn extra_edge_is_caught() {
    let mut more = edges(FPLS[3]);
    more.push(Edge::vertical(1, 2));
    assert!(!validate_fpl(3, &more, Family::Magog).unwrap().is_valid());
}
