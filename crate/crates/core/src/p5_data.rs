//! Coefficient table for the two-state positivity certificate polynomial.
//!
//! Each row is `(i, j, k, l, c)` for the monomial `c * x^(2i) y^(2j) z^(2k) t^(2l)`;
//! rows are sorted lexicographically by exponent. The table is pinned by unit
//! tests on its row count, coefficient sum, extremes, and a rolling checksum.

pub(crate) const P5_TERMS: &[(u8, u8, u8, u8, i64)] = &[
    (0, 0, 0, 0, 144),
    (0, 0, 0, 1, 192),
    (0, 0, 0, 2, 128),
    (0, 0, 0, 3, 256),
    (0, 0, 0, 4, 176),
    (0, 0, 1, 0, 192),
    (0, 0, 1, 1, 416),
    (0, 0, 1, 2, 288),
    (0, 0, 1, 3, 320),
    (0, 0, 1, 4, 256),
    (0, 0, 2, 0, 128),
    (0, 0, 2, 1, 288),
    (0, 0, 2, 2, 352),
    (0, 0, 2, 3, 384),
    (0, 0, 2, 4, 256),
    (0, 0, 3, 0, 256),
    (0, 0, 3, 1, 320),
    (0, 0, 3, 2, 384),
    (0, 0, 3, 3, 352),
    (0, 0, 3, 4, 160),
    (0, 0, 4, 0, 176),
    (0, 0, 4, 1, 256),
    (0, 0, 4, 2, 256),
    (0, 0, 4, 3, 160),
    (0, 0, 4, 4, 48),
    (0, 1, 0, 0, 144),
    (0, 1, 0, 1, 480),
    (0, 1, 0, 2, 784),
    (0, 1, 0, 3, 704),
    (0, 1, 0, 4, 256),
    (0, 1, 1, 0, 480),
    (0, 1, 1, 1, 1312),
    (0, 1, 1, 2, 1888),
    (0, 1, 1, 3, 1760),
    (0, 1, 1, 4, 704),
    (0, 1, 2, 0, 784),
    (0, 1, 2, 1, 1888),
    (0, 1, 2, 2, 2208),
    (0, 1, 2, 3, 1888),
    (0, 1, 2, 4, 784),
    (0, 1, 3, 0, 704),
    (0, 1, 3, 1, 1760),
    (0, 1, 3, 2, 1888),
    (0, 1, 3, 3, 1312),
    (0, 1, 3, 4, 480),
    (0, 1, 4, 0, 256),
    (0, 1, 4, 1, 704),
    (0, 1, 4, 2, 784),
    (0, 1, 4, 3, 480),
    (0, 1, 4, 4, 144),
    (0, 2, 0, 0, 144),
    (0, 2, 0, 1, 480),
    (0, 2, 0, 2, 624),
    (0, 2, 0, 3, 384),
    (0, 2, 0, 4, 96),
    (0, 2, 1, 0, 480),
    (0, 2, 1, 1, 1632),
    (0, 2, 1, 2, 2208),
    (0, 2, 1, 3, 1440),
    (0, 2, 1, 4, 384),
    (0, 2, 2, 0, 624),
    (0, 2, 2, 1, 2208),
    (0, 2, 2, 2, 3168),
    (0, 2, 2, 3, 2208),
    (0, 2, 2, 4, 624),
    (0, 2, 3, 0, 384),
    (0, 2, 3, 1, 1440),
    (0, 2, 3, 2, 2208),
    (0, 2, 3, 3, 1632),
    (0, 2, 3, 4, 480),
    (0, 2, 4, 0, 96),
    (0, 2, 4, 1, 384),
    (0, 2, 4, 2, 624),
    (0, 2, 4, 3, 480),
    (0, 2, 4, 4, 144),
    (1, 0, 0, 0, 576),
    (1, 0, 0, 1, 624),
    (1, 0, 0, 2, 672),
    (1, 0, 0, 3, 1776),
    (1, 0, 0, 4, 1152),
    (1, 0, 1, 0, 912),
    (1, 0, 1, 1, 1664),
    (1, 0, 1, 2, 1248),
    (1, 0, 1, 3, 2304),
    (1, 0, 1, 4, 1808),
    (1, 0, 2, 0, 352),
    (1, 0, 2, 1, 1056),
    (1, 0, 2, 2, 1408),
    (1, 0, 2, 3, 1952),
    (1, 0, 2, 4, 1504),
    (1, 0, 3, 0, 272),
    (1, 0, 3, 1, 256),
    (1, 0, 3, 2, 1120),
    (1, 0, 3, 3, 1408),
    (1, 0, 3, 4, 784),
    (1, 0, 4, 0, 256),
    (1, 0, 4, 1, 240),
    (1, 0, 4, 2, 544),
    (1, 0, 4, 3, 496),
    (1, 0, 4, 4, 192),
    (1, 1, 0, 0, 576),
    (1, 1, 0, 1, 2064),
    (1, 1, 0, 2, 4192),
    (1, 1, 0, 3, 4496),
    (1, 1, 0, 4, 1792),
    (1, 1, 1, 0, 1776),
    (1, 1, 1, 1, 5248),
    (1, 1, 1, 2, 9504),
    (1, 1, 1, 3, 10624),
    (1, 1, 1, 4, 4592),
    (1, 1, 2, 0, 2080),
    (1, 1, 2, 1, 5600),
    (1, 1, 2, 2, 8832),
    (1, 1, 2, 3, 9952),
    (1, 1, 2, 4, 4640),
    (1, 1, 3, 0, 1136),
    (1, 1, 3, 1, 3456),
    (1, 1, 3, 2, 5152),
    (1, 1, 3, 3, 5248),
    (1, 1, 3, 4, 2416),
    (1, 1, 4, 0, 256),
    (1, 1, 4, 1, 1040),
    (1, 1, 4, 2, 1632),
    (1, 1, 4, 3, 1424),
    (1, 1, 4, 4, 576),
    (1, 2, 0, 0, 576),
    (1, 2, 0, 1, 2208),
    (1, 2, 0, 2, 3392),
    (1, 2, 0, 3, 2464),
    (1, 2, 0, 4, 704),
    (1, 2, 1, 0, 1632),
    (1, 2, 1, 1, 6528),
    (1, 2, 1, 2, 10688),
    (1, 2, 1, 3, 8320),
    (1, 2, 1, 4, 2528),
    (1, 2, 2, 0, 1600),
    (1, 2, 2, 1, 6976),
    (1, 2, 2, 2, 12672),
    (1, 2, 2, 3, 10816),
    (1, 2, 2, 4, 3520),
    (1, 2, 3, 0, 608),
    (1, 2, 3, 1, 3200),
    (1, 2, 3, 2, 6848),
    (1, 2, 3, 3, 6528),
    (1, 2, 3, 4, 2272),
    (1, 2, 4, 0, 64),
    (1, 2, 4, 1, 544),
    (1, 2, 4, 2, 1472),
    (1, 2, 4, 3, 1568),
    (1, 2, 4, 4, 576),
    (2, 0, 0, 0, 972),
    (2, 0, 0, 1, 720),
    (2, 0, 0, 2, 1884),
    (2, 0, 0, 3, 5496),
    (2, 0, 0, 4, 3360),
    (2, 0, 1, 0, 1728),
    (2, 0, 1, 1, 2520),
    (2, 0, 1, 2, 2776),
    (2, 0, 1, 3, 7624),
    (2, 0, 1, 4, 5640),
    (2, 0, 2, 0, 764),
    (2, 0, 2, 1, 2104),
    (2, 0, 2, 2, 2616),
    (2, 0, 2, 3, 5016),
    (2, 0, 2, 4, 4252),
    (2, 0, 3, 0, 232),
    (2, 0, 3, 1, 456),
    (2, 0, 3, 2, 2104),
    (2, 0, 3, 3, 2712),
    (2, 0, 3, 4, 1856),
    (2, 0, 4, 0, 224),
    (2, 0, 4, 1, 152),
    (2, 0, 4, 2, 892),
    (2, 0, 4, 3, 848),
    (2, 0, 4, 4, 396),
    (2, 1, 0, 0, 1080),
    (2, 1, 0, 1, 4104),
    (2, 1, 0, 2, 10760),
    (2, 1, 0, 3, 13528),
    (2, 1, 0, 4, 5792),
    (2, 1, 1, 0, 3096),
    (2, 1, 1, 1, 9904),
    (2, 1, 1, 2, 23104),
    (2, 1, 1, 3, 30288),
    (2, 1, 1, 4, 13992),
    (2, 1, 2, 0, 3368),
    (2, 1, 2, 1, 9440),
    (2, 1, 2, 2, 18928),
    (2, 1, 2, 3, 25952),
    (2, 1, 2, 4, 13224),
    (2, 1, 3, 0, 1768),
    (2, 1, 3, 1, 5200),
    (2, 1, 3, 2, 9152),
    (2, 1, 3, 3, 11696),
    (2, 1, 3, 4, 6232),
    (2, 1, 4, 0, 416),
    (2, 1, 4, 1, 1560),
    (2, 1, 4, 2, 2696),
    (2, 1, 4, 3, 2760),
    (2, 1, 4, 4, 1336),
    (2, 2, 0, 0, 1188),
    (2, 2, 0, 1, 5256),
    (2, 2, 0, 2, 9636),
    (2, 2, 0, 3, 8256),
    (2, 2, 0, 4, 2688),
    (2, 2, 1, 0, 3240),
    (2, 2, 1, 1, 14280),
    (2, 2, 1, 2, 27448),
    (2, 2, 1, 3, 25048),
    (2, 2, 1, 4, 8640),
    (2, 2, 2, 0, 3364),
    (2, 2, 2, 1, 14456),
    (2, 2, 2, 2, 29416),
    (2, 2, 2, 3, 29016),
    (2, 2, 2, 4, 10692),
    (2, 2, 3, 0, 1760),
    (2, 2, 3, 1, 7128),
    (2, 2, 3, 2, 15128),
    (2, 2, 3, 3, 16008),
    (2, 2, 3, 4, 6248),
    (2, 2, 4, 0, 448),
    (2, 2, 4, 1, 1696),
    (2, 2, 4, 2, 3524),
    (2, 2, 4, 3, 3784),
    (2, 2, 4, 4, 1508),
    (2, 3, 0, 0, 216),
    (2, 3, 0, 1, 720),
    (2, 3, 0, 2, 952),
    (2, 3, 0, 3, 608),
    (2, 3, 0, 4, 160),
    (2, 3, 1, 0, 720),
    (2, 3, 1, 1, 2480),
    (2, 3, 1, 2, 3472),
    (2, 3, 1, 3, 2384),
    (2, 3, 1, 4, 672),
    (2, 3, 2, 0, 952),
    (2, 3, 2, 1, 3472),
    (2, 3, 2, 2, 5232),
    (2, 3, 2, 3, 3856),
    (2, 3, 2, 4, 1144),
    (2, 3, 3, 0, 608),
    (2, 3, 3, 1, 2384),
    (2, 3, 3, 2, 3856),
    (2, 3, 3, 3, 2992),
    (2, 3, 3, 4, 912),
    (2, 3, 4, 0, 160),
    (2, 3, 4, 1, 672),
    (2, 3, 4, 2, 1144),
    (2, 3, 4, 3, 912),
    (2, 3, 4, 4, 280),
    (3, 0, 0, 0, 900),
    (3, 0, 0, 1, 264),
    (3, 0, 0, 2, 3556),
    (3, 0, 0, 3, 9920),
    (3, 0, 0, 4, 5728),
    (3, 0, 1, 0, 1704),
    (3, 0, 1, 1, 1736),
    (3, 0, 1, 2, 4664),
    (3, 0, 1, 3, 14808),
    (3, 0, 1, 4, 10176),
    (3, 0, 2, 0, 804),
    (3, 0, 2, 1, 1912),
    (3, 0, 2, 2, 2920),
    (3, 0, 2, 3, 8536),
    (3, 0, 2, 4, 7364),
    (3, 0, 3, 0, 96),
    (3, 0, 3, 1, 472),
    (3, 0, 3, 2, 2072),
    (3, 0, 3, 3, 3208),
    (3, 0, 3, 4, 2792),
    (3, 0, 4, 0, 96),
    (3, 0, 4, 1, 32),
    (3, 0, 4, 2, 900),
    (3, 0, 4, 3, 840),
    (3, 0, 4, 4, 516),
    (3, 1, 0, 0, 1224),
    (3, 1, 0, 1, 5016),
    (3, 1, 0, 2, 17592),
    (3, 1, 0, 3, 25032),
    (3, 1, 0, 4, 11232),
    (3, 1, 1, 0, 3144),
    (3, 1, 1, 1, 11344),
    (3, 1, 1, 2, 35712),
    (3, 1, 1, 3, 53424),
    (3, 1, 1, 4, 25912),
    (3, 1, 2, 0, 2840),
    (3, 1, 2, 1, 9056),
    (3, 1, 2, 2, 25872),
    (3, 1, 2, 3, 42464),
    (3, 1, 2, 4, 23192),
    (3, 1, 3, 0, 1144),
    (3, 1, 3, 1, 3760),
    (3, 1, 3, 2, 9984),
    (3, 1, 3, 3, 16720),
    (3, 1, 3, 4, 10120),
    (3, 1, 4, 0, 224),
    (3, 1, 4, 1, 1032),
    (3, 1, 4, 2, 2616),
    (3, 1, 4, 3, 3416),
    (3, 1, 4, 4, 1992),
    (3, 2, 0, 0, 1548),
    (3, 2, 0, 1, 8112),
    (3, 2, 0, 2, 18076),
    (3, 2, 0, 3, 18008),
    (3, 2, 0, 4, 6496),
    (3, 2, 1, 0, 3936),
    (3, 2, 1, 1, 19992),
    (3, 2, 1, 2, 46552),
    (3, 2, 1, 3, 49352),
    (3, 2, 1, 4, 18856),
    (3, 2, 2, 0, 3452),
    (3, 2, 2, 1, 17336),
    (3, 2, 2, 2, 43896),
    (3, 2, 2, 3, 51032),
    (3, 2, 2, 4, 21020),
    (3, 2, 3, 0, 1288),
    (3, 2, 3, 1, 6856),
    (3, 2, 3, 2, 19576),
    (3, 2, 3, 3, 25176),
    (3, 2, 3, 4, 11168),
    (3, 2, 4, 0, 224),
    (3, 2, 4, 1, 1400),
    (3, 2, 4, 2, 4156),
    (3, 2, 4, 3, 5488),
    (3, 2, 4, 4, 2508),
    (3, 3, 0, 0, 648),
    (3, 3, 0, 1, 2592),
    (3, 3, 0, 2, 4168),
    (3, 3, 0, 3, 3152),
    (3, 3, 0, 4, 928),
    (3, 3, 1, 0, 1728),
    (3, 3, 1, 1, 7440),
    (3, 3, 1, 2, 13072),
    (3, 3, 1, 3, 10736),
    (3, 3, 1, 4, 3376),
    (3, 3, 2, 0, 1544),
    (3, 3, 2, 1, 7760),
    (3, 3, 2, 2, 15696),
    (3, 3, 2, 3, 14288),
    (3, 3, 2, 4, 4808),
    (3, 3, 3, 0, 496),
    (3, 3, 3, 1, 3568),
    (3, 3, 3, 2, 8848),
    (3, 3, 3, 3, 8976),
    (3, 3, 3, 4, 3200),
    (3, 3, 4, 0, 32),
    (3, 3, 4, 1, 656),
    (3, 3, 4, 2, 2056),
    (3, 3, 4, 3, 2272),
    (3, 3, 4, 4, 840),
    (4, 0, 0, 0, 495),
    (4, 0, 0, 1, -114),
    (4, 0, 0, 2, 4551),
    (4, 0, 0, 3, 11424),
    (4, 0, 0, 4, 6264),
    (4, 0, 1, 0, 966),
    (4, 0, 1, 1, 494),
    (4, 0, 1, 2, 6098),
    (4, 0, 1, 3, 18218),
    (4, 0, 1, 4, 11648),
    (4, 0, 2, 0, 471),
    (4, 0, 2, 1, 898),
    (4, 0, 2, 2, 2694),
    (4, 0, 2, 3, 10058),
    (4, 0, 2, 4, 8335),
    (4, 0, 3, 0, 24),
    (4, 0, 3, 1, 298),
    (4, 0, 3, 2, 1178),
    (4, 0, 3, 3, 2686),
    (4, 0, 3, 4, 2870),
    (4, 0, 4, 0, 24),
    (4, 0, 4, 1, 8),
    (4, 0, 4, 2, 575),
    (4, 0, 4, 3, 510),
    (4, 0, 4, 4, 463),
    (4, 1, 0, 0, 900),
    (4, 1, 0, 1, 4224),
    (4, 1, 0, 2, 19924),
    (4, 1, 0, 3, 30776),
    (4, 1, 0, 4, 14176),
    (4, 1, 1, 0, 2064),
    (4, 1, 1, 1, 9016),
    (4, 1, 1, 2, 38552),
    (4, 1, 1, 3, 63192),
    (4, 1, 1, 4, 31592),
    (4, 1, 2, 0, 1524),
    (4, 1, 2, 1, 6072),
    (4, 1, 2, 2, 25016),
    (4, 1, 2, 3, 46792),
    (4, 1, 2, 4, 26900),
    (4, 1, 3, 0, 456),
    (4, 1, 3, 1, 1752),
    (4, 1, 3, 2, 7592),
    (4, 1, 3, 3, 16024),
    (4, 1, 3, 4, 10880),
    (4, 1, 4, 0, 96),
    (4, 1, 4, 1, 472),
    (4, 1, 4, 2, 1780),
    (4, 1, 4, 3, 2800),
    (4, 1, 4, 4, 1972),
    (4, 2, 0, 0, 1359),
    (4, 2, 0, 1, 8598),
    (4, 2, 0, 2, 23375),
    (4, 2, 0, 3, 26392),
    (4, 2, 0, 4, 10256),
    (4, 2, 1, 0, 3198),
    (4, 2, 1, 1, 19518),
    (4, 2, 1, 2, 55218),
    (4, 2, 1, 3, 66170),
    (4, 2, 1, 4, 27272),
    (4, 2, 2, 0, 2495),
    (4, 2, 2, 1, 14658),
    (4, 2, 2, 2, 45814),
    (4, 2, 2, 3, 61162),
    (4, 2, 2, 4, 27607),
    (4, 2, 3, 0, 832),
    (4, 2, 3, 1, 4730),
    (4, 2, 3, 2, 17242),
    (4, 2, 3, 3, 26382),
    (4, 2, 3, 4, 13230),
    (4, 2, 4, 0, 176),
    (4, 2, 4, 1, 992),
    (4, 2, 4, 2, 3367),
    (4, 2, 4, 3, 5190),
    (4, 2, 4, 4, 2735),
    (4, 3, 0, 0, 918),
    (4, 3, 0, 1, 4428),
    (4, 3, 0, 2, 8502),
    (4, 3, 0, 3, 7392),
    (4, 3, 0, 4, 2400),
    (4, 3, 1, 0, 2268),
    (4, 3, 1, 1, 11484),
    (4, 3, 1, 2, 23812),
    (4, 3, 1, 3, 22276),
    (4, 3, 1, 4, 7680),
    (4, 3, 2, 0, 1942),
    (4, 3, 2, 1, 10532),
    (4, 3, 2, 2, 24556),
    (4, 3, 2, 3, 25380),
    (4, 3, 2, 4, 9414),
    (4, 3, 3, 0, 752),
    (4, 3, 3, 1, 4356),
    (4, 3, 3, 2, 11780),
    (4, 3, 3, 3, 13596),
    (4, 3, 3, 4, 5420),
    (4, 3, 4, 0, 160),
    (4, 3, 4, 1, 880),
    (4, 3, 4, 2, 2534),
    (4, 3, 4, 3, 3100),
    (4, 3, 4, 4, 1286),
    (4, 4, 0, 0, 108),
    (4, 4, 0, 1, 360),
    (4, 4, 0, 2, 468),
    (4, 4, 0, 3, 288),
    (4, 4, 0, 4, 72),
    (4, 4, 1, 0, 360),
    (4, 4, 1, 1, 1224),
    (4, 4, 1, 2, 1656),
    (4, 4, 1, 3, 1080),
    (4, 4, 1, 4, 288),
    (4, 4, 2, 0, 468),
    (4, 4, 2, 1, 1656),
    (4, 4, 2, 2, 2376),
    (4, 4, 2, 3, 1656),
    (4, 4, 2, 4, 468),
    (4, 4, 3, 0, 288),
    (4, 4, 3, 1, 1080),
    (4, 4, 3, 2, 1656),
    (4, 4, 3, 3, 1224),
    (4, 4, 3, 4, 360),
    (4, 4, 4, 0, 72),
    (4, 4, 4, 1, 288),
    (4, 4, 4, 2, 468),
    (4, 4, 4, 3, 360),
    (4, 4, 4, 4, 108),
    (5, 0, 0, 0, 162),
    (5, 0, 0, 1, -108),
    (5, 0, 0, 2, 3810),
    (5, 0, 0, 3, 8592),
    (5, 0, 0, 4, 4512),
    (5, 0, 1, 0, 324),
    (5, 0, 1, 1, 36),
    (5, 0, 1, 2, 5468),
    (5, 0, 1, 3, 14444),
    (5, 0, 1, 4, 8688),
    (5, 0, 2, 0, 162),
    (5, 0, 2, 1, 252),
    (5, 0, 2, 2, 2164),
    (5, 0, 2, 3, 7980),
    (5, 0, 2, 4, 6226),
    (5, 0, 3, 1, 108),
    (5, 0, 3, 2, 396),
    (5, 0, 3, 3, 1668),
    (5, 0, 3, 4, 2020),
    (5, 0, 4, 2, 210),
    (5, 0, 4, 3, 180),
    (5, 0, 4, 4, 290),
    (5, 1, 0, 0, 432),
    (5, 1, 0, 1, 2520),
    (5, 1, 0, 2, 15584),
    (5, 1, 0, 3, 25336),
    (5, 1, 0, 4, 11840),
    (5, 1, 1, 0, 936),
    (5, 1, 1, 1, 5248),
    (5, 1, 1, 2, 29072),
    (5, 1, 1, 3, 50464),
    (5, 1, 1, 4, 25704),
    (5, 1, 2, 0, 576),
    (5, 1, 2, 1, 3184),
    (5, 1, 2, 2, 17216),
    (5, 1, 2, 3, 35024),
    (5, 1, 2, 4, 20928),
    (5, 1, 3, 0, 72),
    (5, 1, 3, 1, 544),
    (5, 1, 3, 2, 3952),
    (5, 1, 3, 3, 10304),
    (5, 1, 3, 4, 7848),
    (5, 1, 4, 1, 88),
    (5, 1, 4, 2, 736),
    (5, 1, 4, 3, 1432),
    (5, 1, 4, 4, 1296),
    (5, 2, 0, 0, 810),
    (5, 2, 0, 1, 6156),
    (5, 2, 0, 2, 20442),
    (5, 2, 0, 3, 25656),
    (5, 2, 0, 4, 10560),
    (5, 2, 1, 0, 1836),
    (5, 2, 1, 1, 13332),
    (5, 2, 1, 2, 44988),
    (5, 2, 1, 3, 59580),
    (5, 2, 1, 4, 26088),
    (5, 2, 2, 0, 1242),
    (5, 2, 2, 1, 8892),
    (5, 2, 2, 2, 33252),
    (5, 2, 2, 3, 49644),
    (5, 2, 2, 4, 24234),
    (5, 2, 3, 0, 216),
    (5, 2, 3, 1, 1980),
    (5, 2, 3, 2, 10092),
    (5, 2, 3, 3, 18420),
    (5, 2, 3, 4, 10476),
    (5, 2, 4, 1, 264),
    (5, 2, 4, 2, 1578),
    (5, 2, 4, 3, 3084),
    (5, 2, 4, 4, 1962),
    (5, 3, 0, 0, 756),
    (5, 3, 0, 1, 4392),
    (5, 3, 0, 2, 10036),
    (5, 3, 0, 3, 9920),
    (5, 3, 0, 4, 3520),
    (5, 3, 1, 0, 1800),
    (5, 3, 1, 1, 10568),
    (5, 3, 1, 2, 25560),
    (5, 3, 1, 3, 26872),
    (5, 3, 1, 4, 10080),
    (5, 3, 2, 0, 1332),
    (5, 3, 2, 1, 8408),
    (5, 3, 2, 2, 22952),
    (5, 3, 2, 3, 26776),
    (5, 3, 2, 4, 10900),
    (5, 3, 3, 0, 288),
    (5, 3, 3, 1, 2552),
    (5, 3, 3, 2, 8984),
    (5, 3, 3, 3, 12232),
    (5, 3, 3, 4, 5512),
    (5, 3, 4, 1, 320),
    (5, 3, 4, 2, 1556),
    (5, 3, 4, 3, 2408),
    (5, 3, 4, 4, 1172),
    (5, 4, 0, 0, 216),
    (5, 4, 0, 1, 864),
    (5, 4, 0, 2, 1368),
    (5, 4, 0, 3, 1008),
    (5, 4, 0, 4, 288),
    (5, 4, 1, 0, 576),
    (5, 4, 1, 1, 2448),
    (5, 4, 1, 2, 4176),
    (5, 4, 1, 3, 3312),
    (5, 4, 1, 4, 1008),
    (5, 4, 2, 0, 504),
    (5, 4, 2, 1, 2448),
    (5, 4, 2, 2, 4752),
    (5, 4, 2, 3, 4176),
    (5, 4, 2, 4, 1368),
    (5, 4, 3, 0, 144),
    (5, 4, 3, 1, 1008),
    (5, 4, 3, 2, 2448),
    (5, 4, 3, 3, 2448),
    (5, 4, 3, 4, 864),
    (5, 4, 4, 1, 144),
    (5, 4, 4, 2, 504),
    (5, 4, 4, 3, 576),
    (5, 4, 4, 4, 216),
    (6, 0, 0, 0, 27),
    (6, 0, 0, 1, -18),
    (6, 0, 0, 2, 1979),
    (6, 0, 0, 3, 4120),
    (6, 0, 0, 4, 2096),
    (6, 0, 1, 0, 54),
    (6, 0, 1, 1, 6),
    (6, 0, 1, 2, 3002),
    (6, 0, 1, 3, 7186),
    (6, 0, 1, 4, 4136),
    (6, 0, 2, 0, 27),
    (6, 0, 2, 1, 42),
    (6, 0, 2, 2, 1182),
    (6, 0, 2, 3, 4018),
    (6, 0, 2, 4, 2979),
    (6, 0, 3, 1, 18),
    (6, 0, 3, 2, 66),
    (6, 0, 3, 3, 726),
    (6, 0, 3, 4, 934),
    (6, 0, 4, 2, 35),
    (6, 0, 4, 3, 30),
    (6, 0, 4, 4, 123),
    (6, 1, 0, 0, 108),
    (6, 1, 0, 1, 936),
    (6, 1, 0, 2, 7916),
    (6, 1, 0, 3, 13456),
    (6, 1, 0, 4, 6368),
    (6, 1, 1, 0, 216),
    (6, 1, 1, 1, 1872),
    (6, 1, 1, 2, 14192),
    (6, 1, 1, 3, 26056),
    (6, 1, 1, 4, 13520),
    (6, 1, 2, 0, 108),
    (6, 1, 2, 1, 1008),
    (6, 1, 2, 2, 7584),
    (6, 1, 2, 3, 16968),
    (6, 1, 2, 4, 10572),
    (6, 1, 3, 1, 72),
    (6, 1, 3, 2, 1160),
    (6, 1, 3, 3, 4192),
    (6, 1, 3, 4, 3680),
    (6, 1, 4, 2, 140),
    (6, 1, 4, 3, 400),
    (6, 1, 4, 4, 548),
    (6, 2, 0, 0, 243),
    (6, 2, 0, 1, 2574),
    (6, 2, 0, 2, 11299),
    (6, 2, 0, 3, 15848),
    (6, 2, 0, 4, 6880),
    (6, 2, 1, 0, 486),
    (6, 2, 1, 1, 5214),
    (6, 2, 1, 2, 22994),
    (6, 2, 1, 3, 34194),
    (6, 2, 1, 4, 15928),
    (6, 2, 2, 0, 243),
    (6, 2, 2, 1, 2914),
    (6, 2, 2, 2, 14758),
    (6, 2, 2, 3, 25538),
    (6, 2, 2, 4, 13643),
    (6, 2, 3, 1, 274),
    (6, 2, 3, 2, 3186),
    (6, 2, 3, 3, 7806),
    (6, 2, 3, 4, 5278),
    (6, 2, 4, 2, 315),
    (6, 2, 4, 3, 998),
    (6, 2, 4, 4, 875),
    (6, 3, 0, 0, 270),
    (6, 3, 0, 1, 2268),
    (6, 3, 0, 2, 6766),
    (6, 3, 0, 3, 7808),
    (6, 3, 0, 4, 3040),
    (6, 3, 1, 0, 540),
    (6, 3, 1, 1, 4836),
    (6, 3, 1, 2, 15420),
    (6, 3, 1, 3, 18964),
    (6, 3, 1, 4, 7840),
    (6, 3, 2, 0, 270),
    (6, 3, 2, 1, 2972),
    (6, 3, 2, 2, 11492),
    (6, 3, 2, 3, 16244),
    (6, 3, 2, 4, 7486),
    (6, 3, 3, 1, 404),
    (6, 3, 3, 2, 3156),
    (6, 3, 3, 3, 5940),
    (6, 3, 3, 4, 3252),
    (6, 3, 4, 2, 350),
    (6, 3, 4, 3, 916),
    (6, 3, 4, 4, 598),
    (6, 4, 0, 0, 108),
    (6, 4, 0, 1, 648),
    (6, 4, 0, 2, 1404),
    (6, 4, 0, 3, 1296),
    (6, 4, 0, 4, 432),
    (6, 4, 1, 0, 216),
    (6, 4, 1, 1, 1488),
    (6, 4, 1, 2, 3616),
    (6, 4, 1, 3, 3640),
    (6, 4, 1, 4, 1296),
    (6, 4, 2, 0, 108),
    (6, 4, 2, 1, 1024),
    (6, 4, 2, 2, 3136),
    (6, 4, 2, 3, 3656),
    (6, 4, 2, 4, 1436),
    (6, 4, 3, 1, 184),
    (6, 4, 3, 2, 1064),
    (6, 4, 3, 3, 1600),
    (6, 4, 3, 4, 720),
    (6, 4, 4, 2, 140),
    (6, 4, 4, 3, 288),
    (6, 4, 4, 4, 148),
    (7, 0, 0, 2, 576),
    (7, 0, 0, 3, 1152),
    (7, 0, 0, 4, 576),
    (7, 0, 1, 2, 896),
    (7, 0, 1, 3, 2048),
    (7, 0, 1, 4, 1152),
    (7, 0, 2, 2, 352),
    (7, 0, 2, 3, 1152),
    (7, 0, 2, 4, 832),
    (7, 0, 3, 3, 192),
    (7, 0, 3, 4, 256),
    (7, 0, 4, 4, 32),
    (7, 1, 0, 1, 144),
    (7, 1, 0, 2, 2304),
    (7, 1, 0, 3, 4176),
    (7, 1, 0, 4, 2016),
    (7, 1, 1, 1, 264),
    (7, 1, 1, 2, 3896),
    (7, 1, 1, 3, 7808),
    (7, 1, 1, 4, 4176),
    (7, 1, 2, 1, 120),
    (7, 1, 2, 2, 1816),
    (7, 1, 2, 3, 4736),
    (7, 1, 2, 4, 3136),
    (7, 1, 3, 2, 128),
    (7, 1, 3, 3, 952),
    (7, 1, 3, 4, 1016),
    (7, 1, 4, 3, 40),
    (7, 1, 4, 4, 136),
    (7, 2, 0, 1, 432),
    (7, 2, 0, 2, 3456),
    (7, 2, 0, 3, 5616),
    (7, 2, 0, 4, 2592),
    (7, 2, 1, 1, 792),
    (7, 2, 1, 2, 6312),
    (7, 2, 1, 3, 11136),
    (7, 2, 1, 4, 5616),
    (7, 2, 2, 1, 360),
    (7, 2, 2, 2, 3336),
    (7, 2, 2, 3, 7296),
    (7, 2, 2, 4, 4416),
    (7, 2, 3, 2, 384),
    (7, 2, 3, 3, 1704),
    (7, 2, 3, 4, 1512),
    (7, 2, 4, 3, 120),
    (7, 2, 4, 4, 216),
    (7, 3, 0, 1, 432),
    (7, 3, 0, 2, 2304),
    (7, 3, 0, 3, 3312),
    (7, 3, 0, 4, 1440),
    (7, 3, 1, 1, 792),
    (7, 3, 1, 2, 4520),
    (7, 3, 1, 3, 7040),
    (7, 3, 1, 4, 3312),
    (7, 3, 2, 1, 360),
    (7, 3, 2, 2, 2632),
    (7, 3, 2, 3, 4992),
    (7, 3, 2, 4, 2752),
    (7, 3, 3, 2, 384),
    (7, 3, 3, 3, 1320),
    (7, 3, 3, 4, 1000),
    (7, 3, 4, 3, 120),
    (7, 3, 4, 4, 152),
    (7, 4, 0, 1, 144),
    (7, 4, 0, 2, 576),
    (7, 4, 0, 3, 720),
    (7, 4, 0, 4, 288),
    (7, 4, 1, 1, 264),
    (7, 4, 1, 2, 1208),
    (7, 4, 1, 3, 1664),
    (7, 4, 1, 4, 720),
    (7, 4, 2, 1, 120),
    (7, 4, 2, 2, 760),
    (7, 4, 2, 3, 1280),
    (7, 4, 2, 4, 640),
    (7, 4, 3, 2, 128),
    (7, 4, 3, 3, 376),
    (7, 4, 3, 4, 248),
    (7, 4, 4, 3, 40),
    (7, 4, 4, 4, 40),
    (8, 0, 0, 2, 72),
    (8, 0, 0, 3, 144),
    (8, 0, 0, 4, 72),
    (8, 0, 1, 2, 112),
    (8, 0, 1, 3, 256),
    (8, 0, 1, 4, 144),
    (8, 0, 2, 2, 44),
    (8, 0, 2, 3, 144),
    (8, 0, 2, 4, 104),
    (8, 0, 3, 3, 24),
    (8, 0, 3, 4, 32),
    (8, 0, 4, 4, 4),
    (8, 1, 0, 2, 288),
    (8, 1, 0, 3, 576),
    (8, 1, 0, 4, 288),
    (8, 1, 1, 2, 448),
    (8, 1, 1, 3, 1024),
    (8, 1, 1, 4, 576),
    (8, 1, 2, 2, 176),
    (8, 1, 2, 3, 576),
    (8, 1, 2, 4, 416),
    (8, 1, 3, 3, 96),
    (8, 1, 3, 4, 128),
    (8, 1, 4, 4, 16),
    (8, 2, 0, 2, 432),
    (8, 2, 0, 3, 864),
    (8, 2, 0, 4, 432),
    (8, 2, 1, 2, 672),
    (8, 2, 1, 3, 1536),
    (8, 2, 1, 4, 864),
    (8, 2, 2, 2, 264),
    (8, 2, 2, 3, 864),
    (8, 2, 2, 4, 624),
    (8, 2, 3, 3, 144),
    (8, 2, 3, 4, 192),
    (8, 2, 4, 4, 24),
    (8, 3, 0, 2, 288),
    (8, 3, 0, 3, 576),
    (8, 3, 0, 4, 288),
    (8, 3, 1, 2, 448),
    (8, 3, 1, 3, 1024),
    (8, 3, 1, 4, 576),
    (8, 3, 2, 2, 176),
    (8, 3, 2, 3, 576),
    (8, 3, 2, 4, 416),
    (8, 3, 3, 3, 96),
    (8, 3, 3, 4, 128),
    (8, 3, 4, 4, 16),
    (8, 4, 0, 2, 72),
    (8, 4, 0, 3, 144),
    (8, 4, 0, 4, 72),
    (8, 4, 1, 2, 112),
    (8, 4, 1, 3, 256),
    (8, 4, 1, 4, 144),
    (8, 4, 2, 2, 44),
    (8, 4, 2, 3, 144),
    (8, 4, 2, 4, 104),
    (8, 4, 3, 3, 24),
    (8, 4, 3, 4, 32),
    (8, 4, 4, 4, 4),
];
