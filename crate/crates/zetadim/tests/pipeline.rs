use zetadim::compare::compare_curves;
use zetadim_core::specdim::{dimension_curve, plateau_growth, LambdaGrid, PlateauParams};
use zetadim_core::spectra::{
    circle_dirac, gue_spectrum, scale_zeros, EnsembleConfig, EnsembleKind,
};
use zetadim_core::zeros::{find_zeros, SearchOptions, ZeroLimit};

#[test]
fn plateau_levels_are_stable_across_sizes() {
    let zs = find_zeros(ZeroLimit::Count(10_000), &SearchOptions::default()).unwrap();
    let sizes = [100, 1000, 3000, 10_000];
    let entries = plateau_growth(&zs, &sizes, None, &PlateauParams::default(), true).unwrap();
    let levels: Vec<f64> = entries[1..]
        .iter()
        .map(|e| {
            assert!(e.report.found, "N={}", e.size);
            e.report.mean_dim
        })
        .collect();
    let spread = levels.iter().cloned().fold(f64::MIN, f64::max)
        - levels.iter().cloned().fold(f64::MAX, f64::min);
    assert!(spread <= 0.15, "{levels:?}");
    let widths: Vec<f64> = entries[1..].iter().map(|e| e.report.width_efolds).collect();
    assert!(widths.windows(2).all(|w| w[1] >= w[0]), "{widths:?}");
}

#[test]
fn riemann_versus_baselines() {
    let zs = find_zeros(ZeroLimit::Count(10_000), &SearchOptions::default()).unwrap();
    let riemann = scale_zeros(&zs).unwrap();
    let r = dimension_curve(&riemann, &LambdaGrid::for_spectrum(&riemann), true).unwrap();
    let circle = circle_dirac(10_000).unwrap();
    let c = dimension_curve(&circle, &LambdaGrid::for_spectrum(&circle), true).unwrap();
    let params = PlateauParams::default();
    let cmp = compare_curves(&r, &c, &params).unwrap();
    let diff = cmp.plateau_diff().unwrap();
    assert!(
        (diff - (cmp.plateau_a.mean_dim - 1.0)).abs() < 0.02,
        "{diff}"
    );
    assert!(diff > 0.0);

    let gue = gue_spectrum(&EnsembleConfig {
        size: 2000,
        seed: 1,
        kind: EnsembleKind::Gue,
    })
    .unwrap();
    let g = dimension_curve(&gue, &LambdaGrid::for_spectrum(&gue), true).unwrap();
    let cmp = compare_curves(&r, &g, &params).unwrap();
    assert!(cmp.max_abs_diff > 0.0);
    // unfolded GUE levels have unit spacing exactly, so their plateau sits at
    // one while the rescaled zeros sit above it
    assert!(
        (cmp.plateau_b.mean_dim - 1.0).abs() < 0.02,
        "{:?}",
        cmp.plateau_b
    );
}
