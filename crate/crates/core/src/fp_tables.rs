// Frozen numeric tables, generated from a 300-bit reference computation.
/// 3.14159265358979323846264338328
pub const PI_DD: (u64, u64) = (0x400921fb54442d18, 0x3ca1a62633145c07);
/// 2.71828182845904523536028747135
pub const E_DD: (u64, u64) = (0x4005bf0a8b145769, 0x3ca4d57ee2b1013a);
/// 0.693147180559945309417232121458
pub const LN2_DD: (u64, u64) = (0x3fe62e42fefa39ef, 0x3c7abc9e3b39803f);
/// 0.6931471805599453094172321214581765680755
pub const LN2_T3: (u64, u64, u64) = (0x3fe62e42fefa39ef, 0x3c7abc9e3b39803f, 0x3907b57a079a1934);
/// 1.570796326794896619231321691639751442099
pub const PI_HALF_T3: (u64, u64, u64) = (0x3ff921fb54442d18, 0x3c91a62633145c07, 0xb91f1976b7ed8fbc);
/// 1.57079632679489661923132169164
pub const PI_HALF_DD: (u64, u64) = (0x3ff921fb54442d18, 0x3c91a62633145c07);
/// 0.63661977236758134307553505349
pub const TWO_OVER_PI_DD: (u64, u64) = (0x3fe45f306dc9c883, 0xbc86b01ec5417056);
/// 1.61803398874989484820458683437
pub const PHI_DD: (u64, u64) = (0x3ff9e3779b97f4a8, 0xbc8f506319fcfd19);
/// 1/k! for k = 2..=30.
pub const INV_FACT: [(u64, u64); 29] = [
    (0x3fe0000000000000, 0x0000000000000000), // 1/2!
    (0x3fc5555555555555, 0x3c65555555555555), // 1/3!
    (0x3fa5555555555555, 0x3c45555555555555), // 1/4!
    (0x3f81111111111111, 0x3c01111111111111), // 1/5!
    (0x3f56c16c16c16c17, 0xbbef49f49f49f49f), // 1/6!
    (0x3f2a01a01a01a01a, 0x3b6a01a01a01a01a), // 1/7!
    (0x3efa01a01a01a01a, 0x3b3a01a01a01a01a), // 1/8!
    (0x3ec71de3a556c734, 0xbb6c154f8ddc6c00), // 1/9!
    (0x3e927e4fb7789f5c, 0x3b3cbbc05b4fa99a), // 1/10!
    (0x3e5ae64567f544e4, 0xbafc062e06d1f209), // 1/11!
    (0x3e21eed8eff8d898, 0xbac2aec959e14c06), // 1/12!
    (0x3de6124613a86d09, 0x3a8f28e0cc748ebe), // 1/13!
    (0x3da93974a8c07c9d, 0x3a305d6f8a2efd1f), // 1/14!
    (0x3d6ae7f3e733b81f, 0x39e1d8656b0ee8cb), // 1/15!
    (0x3d2ae7f3e733b81f, 0x39a1d8656b0ee8cb), // 1/16!
    (0x3ce952c77030ad4a, 0x398ac981465ddc6c), // 1/17!
    (0x3ca6827863b97d97, 0x394eec01221a8b0b), // 1/18!
    (0x3c62f49b46814157, 0x38f2650f61dbdcb4), // 1/19!
    (0x3c1e542ba4020225, 0x387ea72b4afe3c2f), // 1/20!
    (0x3bd71b8ef6dcf572, 0xb87d043ae40c4647), // 1/21!
    (0x3b90ce396db7f853, 0xb83aebcdbd20331c), // 1/22!
    (0x3b4761b41316381a, 0xb7d3423c7d91404f), // 1/23!
    (0x3aff2cf01972f578, 0xb789ada5fcc1ab14), // 1/24!
    (0x3ab3f3ccdd165fa9, 0xb7458ddadf344487), // 1/25!
    (0x3a688e85fc6a4e5a, 0xb7071c37ebd16540), // 1/26!
    (0x3a1d1ab1c2dccea3, 0x36a054d0c78aea14), // 1/27!
    (0x39d0a18a2635085d, 0x366b9e2e28e1aa54), // 1/28!
    (0x398259f98b4358ad, 0x362eaf8c39dd9bc5), // 1/29!
    (0x3933932c5047d60e, 0x35d832b7b530a627), // 1/30!
];
/// 10^(2^j) for j = 0..=8.
pub const POW10_POS: [(u64, u64); 9] = [
    (0x4024000000000000, 0x0000000000000000), // 1e1
    (0x4059000000000000, 0x0000000000000000), // 1e2
    (0x40c3880000000000, 0x0000000000000000), // 1e4
    (0x4197d78400000000, 0x0000000000000000), // 1e8
    (0x4341c37937e08000, 0x0000000000000000), // 1e16
    (0x4693b8b5b5056e17, 0xc333107f00000000), // 1e32
    (0x4d384f03e93ff9f5, 0xc9c2ac340948e389), // 1e64
    (0x5a827748f9301d32, 0xd72901cc86649e4a), // 1e128
    (0x75154fdd7f73bf3c, 0xf1a7222446fe4670), // 1e256
];
/// 10^(-2^j) for j = 0..=8.
pub const POW10_NEG: [(u64, u64); 9] = [
    (0x3fb999999999999a, 0xbc5999999999999a), // 1e-1
    (0x3f847ae147ae147b, 0xbc0eb851eb851eb8), // 1e-2
    (0x3f1a36e2eb1c432d, 0xbbb6a161e4f765fe), // 1e-4
    (0x3e45798ee2308c3a, 0xbad03023df2d4c94), // 1e-8
    (0x3c9cd2b297d889bc, 0x3925b4c2ebe68799), // 1e-16
    (0x3949f623d5a8a733, 0xb5ea2cc10f3892d4), // 1e-32
    (0x32a50ffd44f4a73d, 0x2f3a53f2398d747b), // 1e-64
    (0x255bba08cf8c979d, 0xa1fafa9c1a60497d), // 1e-128
    (0x0ac8062864ac6f43, 0x07539fa911155ff0), // 1e-256
];
