//! Scaled Bessel values against a 40-digit reference table.

use winding_atlas::specfun::bessel_i_scaled;

// (ν, x, e^{-x} I_ν(x)), computed with mpmath at 40 significant digits.
const REFERENCE: &[(f64, f64, f64)] = &[
    (0.0, 0.001, 0.9990007495835156),
    (0.0, 0.1, 0.9071009257823011),
    (0.0, 1.0, 0.46575960759364043),
    (0.0, 5.0, 0.18354081260932836),
    (0.0, 19.9, 0.0900085888643896),
    (0.0, 20.0, 0.08978031188482602),
    (0.0, 35.0, 0.06767837835041363),
    (0.0, 100.0, 0.03994437929909668),
    (0.0, 400.0, 0.01995335628193999),
    (0.0, 1250.0, 0.011284920558316508),
    (0.0, 3000.0, 0.00728395974654569),
    (0.0, 10000.0, 0.003989472674604732),
    (0.25, 0.001, 0.16481138527875486),
    (0.25, 0.1, 0.4729989453830049),
    (0.25, 1.0, 0.41344199850978713),
    (0.25, 5.0, 0.18223762203904337),
    (0.25, 19.9, 0.08986360046138868),
    (0.25, 20.0, 0.08963643347467866),
    (0.25, 35.0, 0.06761708799910267),
    (0.25, 100.0, 0.03993183555684286),
    (0.25, 400.0, 0.019951795533206796),
    (0.25, 1250.0, 0.01128463832588569),
    (0.25, 3000.0, 0.00728388385971002),
    (0.25, 10000.0, 0.003989460206898683),
    (0.5, 0.001, 0.0252061107074578),
    (0.5, 0.1, 0.2286831660755234),
    (0.5, 1.0, 0.3449513138882446),
    (0.5, 5.0, 0.17840431170432103),
    (0.5, 19.9, 0.08943006113026863),
    (0.5, 20.0, 0.08920620580763855),
    (0.5, 35.0, 0.06743355313447355),
    (0.5, 100.0, 0.03989422804014327),
    (0.5, 400.0, 0.019947114020071634),
    (0.5, 1250.0, 0.011283791670955126),
    (0.5, 3000.0, 0.007283656203947194),
    (0.5, 10000.0, 0.003989422804014327),
    (0.7, 0.001, 0.005375929029460983),
    (0.7, 0.1, 0.12248891950359873),
    (0.7, 1.0, 0.28761236380622024),
    (0.7, 5.0, 0.17363435621088835),
    (0.7, 19.9, 0.08887823812678922),
    (0.7, 20.0, 0.08865858189416813),
    (0.7, 35.0, 0.06719936258329913),
    (0.7, 100.0, 0.039846142272484286),
    (0.7, 400.0, 0.019941123287461525),
    (0.7, 1250.0, 0.01128270804535964),
    (0.7, 3000.0, 0.007283364814954572),
    (0.7, 10000.0, 0.003989374928834061),
    (1.0, 0.001, 0.0004995003123542213),
    (1.0, 0.1, 0.045298446808809324),
    (1.0, 1.0, 0.20791041534970844),
    (1.0, 5.0, 0.16397226694454237),
    (1.0, 19.9, 0.0877171021317061),
    (1.0, 20.0, 0.08750622218328867),
    (1.0, 35.0, 0.06670443172949143),
    (1.0, 100.0, 0.03974415302513025),
    (1.0, 400.0, 0.019928398958903543),
    (1.0, 1250.0, 0.011280405686576397),
    (1.0, 3000.0, 0.007282745652054752),
    (1.0, 10000.0, 0.003989273195983662),
    (2.5, 0.001, 1.6804072204584047e-09),
    (2.5, 0.1, 0.00015231039343849566),
    (2.5, 1.0, 0.021005514809116315),
    (2.5, 5.0, 0.09276052219309963),
    (2.5, 19.9, 0.07662562572185412),
    (2.5, 20.0, 0.07649432148005006),
    (2.5, 35.0, 0.06181867768980717),
    (2.5, 100.0, 0.03870936946735101),
    (2.5, 400.0, 0.019797884673308973),
    (2.5, 1250.0, 0.011256732235824842),
    (2.5, 3000.0, 0.007276374975628648),
    (2.5, 10000.0, 0.0039882260968558065),
    (7.3, 0.001, 8.598716097396229e-29),
    (7.3, 0.1, 3.101481913055942e-14),
    (7.3, 1.0, 2.591990870530705e-07),
    (7.3, 5.0, 0.0012045154037460873),
    (7.3, 19.9, 0.023154098427362966),
    (7.3, 20.0, 0.02325303444708859),
    (7.3, 35.0, 0.03135039806125605),
    (7.3, 100.0, 0.030563693793151245),
    (7.3, 400.0, 0.01866599154985304),
    (7.3, 1250.0, 0.011046823246115875),
    (7.3, 3000.0, 0.00721954183022382),
    (7.3, 10000.0, 0.003978856344174773),
    (19.5, 0.001, 7.881070895651227e-83),
    (19.5, 0.1, 7.139092973642251e-44),
    (19.5, 1.0, 9.290087720272966e-25),
    (19.5, 5.0, 9.703911329147156e-13),
    (19.5, 19.9, 9.844621066418091e-06),
    (19.5, 20.0, 1.0231756381538736e-05),
    (19.5, 35.0, 0.0003142025032231211),
    (19.5, 100.0, 0.005946277822347082),
    (19.5, 400.0, 0.012398603988268442),
    (19.5, 1250.0, 0.00969208496716904),
    (19.5, 3000.0, 0.006836591526552792),
    (19.5, 10000.0, 0.003914335627125469),
    (24.9, 0.001, 5.673416699076191e-108),
    (24.9, 0.1, 3.242585564695491e-58),
    (24.9, 1.0, 1.0572453189420818e-33),
    (24.9, 5.0, 6.187222447287973e-18),
    (24.9, 19.9, 5.1612606600259156e-08),
    (24.9, 20.0, 5.474760311180814e-08),
    (24.9, 35.0, 1.2030609881169552e-05),
    (24.9, 100.0, 0.0018003283358221179),
    (24.9, 400.0, 0.00918585983843394),
    (24.9, 1250.0, 0.008805462808002209),
    (24.9, 3000.0, 0.006568746354414893),
    (24.9, 10000.0, 0.0038676884399359577),
    (25.0, 0.001, 1.919420545825052e-108),
    (25.0, 0.1, 1.7386683176063083e-58),
    (25.0, 1.0, 7.136497416504832e-34),
    (25.0, 5.0, 4.901402240803699e-18),
    (25.0, 19.9, 4.641091429318495e-08),
    (25.0, 20.0, 4.924946522021893e-08),
    (25.0, 35.0, 1.1250940361241175e-05),
    (25.0, 100.0, 0.0017561998795048693),
    (25.0, 400.0, 0.009128707128002641),
    (25.0, 1250.0, 0.008787898778076448),
    (25.0, 3000.0, 0.00656328477101363),
    (25.0, 10000.0, 0.003866723524801097),
    (31.7, 0.001, 2.4530709216835353e-140),
    (31.7, 0.1, 5.581464287857604e-77),
    (31.7, 1.0, 1.1459609832904155e-45),
    (31.7, 5.0, 3.620718821740028e-25),
    (31.7, 19.9, 1.919004481836148e-11),
    (31.7, 20.0, 2.0935338431644022e-11),
    (31.7, 35.0, 7.54686681088139e-08),
    (31.7, 100.0, 0.00026705964121343775),
    (31.7, 400.0, 0.005676708573565068),
    (31.7, 1250.0, 0.007548674907105135),
    (31.7, 3000.0, 0.0061605533622791035),
    (31.7, 10000.0, 0.0037939666831052236),
    (49.9, 0.001, 9.23380869011929e-230),
    (49.9, 0.1, 5.277242451217292e-130),
    (49.9, 1.0, 1.7125910062072964e-80),
    (49.9, 5.0, 2.668148570448684e-47),
    (49.9, 19.9, 4.6317151176919423e-23),
    (49.9, 20.0, 5.4846990402295e-23),
    (49.9, 35.0, 9.888868583172604e-16),
    (49.9, 100.0, 1.8825305800343568e-07),
    (49.9, 400.0, 0.0008878359111897798),
    (49.9, 1250.0, 0.00416700331446187),
    (49.9, 3000.0, 0.004809597274408705),
    (49.9, 10000.0, 0.0035224352864200613),
    (50.0, 0.001, 2.917366905159355e-230),
    (50.0, 0.1, 2.6425133197552334e-130),
    (50.0, 1.0, 1.0795919973373183e-80),
    (50.0, 5.0, 1.9752087109639302e-47),
    (50.0, 19.9, 3.923435312183594e-23),
    (50.0, 20.0, 4.648149943764283e-23),
    (50.0, 35.0, 8.805441994759936e-16),
    (50.0, 100.0, 1.7938050431597962e-07),
    (50.0, 400.0, 0.0008768327433926851),
    (50.0, 1250.0, 0.0041503829758485385),
    (50.0, 3000.0, 0.004801594994674146),
    (50.0, 10000.0, 0.0035206761887220453),
    (80.2, 0.1, 2.3877178440351696e-224),
    (80.2, 1.0, 1.5432691996904868e-144),
    (80.2, 5.0, 3.47322747476749e-90),
    (80.2, 19.9, 4.7055852806773804e-48),
    (80.2, 20.0, 6.442151536595853e-48),
    (80.2, 35.0, 7.208312710596058e-34),
    (80.2, 100.0, 1.6417487561960192e-15),
    (80.2, 400.0, 6.539355469499639e-06),
    (80.2, 1250.0, 0.0008611427134144889),
    (80.2, 3000.0, 0.0024931653576156236),
    (80.2, 10000.0, 0.0028922730135128895),
    (150.5, 5.0, 7.76945475996871e-207),
    (150.5, 19.9, 9.27021934873616e-123),
    (150.5, 20.0, 1.7952881447697352e-122),
    (150.5, 35.0, 7.999886494557057e-92),
    (150.5, 100.0, 1.7574887184636834e-45),
    (150.5, 400.0, 1.3451352699658294e-14),
    (150.5, 1250.0, 1.321039558242403e-06),
    (150.5, 3000.0, 0.00016709303613185076),
    (150.5, 10000.0, 0.0012854531601912784),
    (999.0, 1250.0, 2.9200923793085463e-168),
    (999.0, 3000.0, 1.8179678951690274e-74),
    (999.0, 10000.0, 8.840776864606056e-25),
    (1000.0, 1250.0, 1.403633471723205e-168),
    (1000.0, 3000.0, 1.310458806599378e-74),
    (1000.0, 10000.0, 8.001151572860948e-25),
];

#[test]
fn matches_reference_table() {
    let mut worst: f64 = 0.0;
    for &(nu, x, expect) in REFERENCE {
        let got = bessel_i_scaled(nu, x).unwrap();
        let rel = ((got - expect) / expect).abs();
        assert!(rel < 1e-12, "nu={nu} x={x}: {got:e} vs {expect:e} (rel {rel:e})");
        worst = worst.max(rel);
    }
    assert!(worst < 1e-12);
}
