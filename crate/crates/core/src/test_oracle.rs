// Reference pairs (hi, lo bit patterns) from a 300-bit computation; inputs are exact f64 values.
/// exp(0.5)
pub const EXP_0P5: (u64, u64) = (0x3ffa61298e1e069c, 0xbc8b4690082a4906);
/// exp(-3.7)
pub const EXP_M3P7: (u64, u64) = (0x3f99511fc6871044, 0xbc37e2cb05512fcc);
/// exp(1.0)
pub const EXP_1P0: (u64, u64) = (0x4005bf0a8b145769, 0x3ca4d57ee2b1013a);
/// exp(10.0)
pub const EXP_10P0: (u64, u64) = (0x40d5829dcf950560, 0xbd783e055cfea4bb);
/// exp(-20.0)
pub const EXP_M20P0: (u64, u64) = (0x3e21b48655f37267, 0xbaa9fb4baeafe811);
/// exp(0.001)
pub const EXP_0P001: (u64, u64) = (0x3ff0041919b7ee34, 0xbc88bc2a4c3c7051);
/// exp(0.0625)
pub const EXP_0P0625: (u64, u64) = (0x3ff1082b577d34ed, 0x3c9f56c680678897);
/// exp(-0.25)
pub const EXP_M0P25: (u64, u64) = (0x3fe8ebef9eac820b, 0xbc6797d4686c5393);
/// exp(700.0)
pub const EXP_700P0: (u64, u64) = (0x7f0d945df4f8ec8e, 0x7b9183392684a46e);
/// exp(-700.0)
pub const EXP_M700P0: (u64, u64) = (0x00d14f2b0fb9307f, 0x00000000000000ac);
/// ln(2.0)
pub const LN_2P0: (u64, u64) = (0x3fe62e42fefa39ef, 0x3c7abc9e3b39803f);
/// ln(10.0)
pub const LN_10P0: (u64, u64) = (0x40026bb1bbb55516, 0xbcaf48ad494ea3e9);
/// ln(0.5)
pub const LN_0P5: (u64, u64) = (0xbfe62e42fefa39ef, 0xbc7abc9e3b39803f);
/// ln(1e-05)
pub const LN_1EM05: (u64, u64) = (0xc027069e2aa2aa5b, 0x3cb41ab1374499c7);
/// ln(1.0000001)
pub const LN_1P0000001: (u64, u64) = (0x3e7ad7f2847b6492, 0x3afd7f4a57fcf3dd);
/// ln(3.141592653589793)
pub const LN_3P141592653589793: (u64, u64) = (0x3ff250d048e7a1bd, 0xbc808db302d279af);
/// ln(1.8226346549662422)
pub const LN_1P8226346549662422: (u64, u64) = (0x3fe33584d599563a, 0x3c77c59d9a01a9e8);
/// ln(1e+300)
pub const LN_1E300: (u64, u64) = (0x4085963447f87fb5, 0x3d1abccc0710fcd4);
/// sin(0.5)
pub const SIN_0P5: (u64, u64) = (0x3fdeaee8744b05f0, 0xbc5789b43c9b027d);
/// sin(1.0)
pub const SIN_1P0: (u64, u64) = (0x3feaed548f090cee, 0x3c406374f484e288);
/// sin(3.0)
pub const SIN_3P0: (u64, u64) = (0x3fc210386db6d55b, 0x3c63c7205d08d063);
/// sin(6.0)
pub const SIN_6P0: (u64, u64) = (0xbfd1e1f18ab0a2c0, 0xbc6d31220a227a51);
/// sin(0.001)
pub const SIN_0P001: (u64, u64) = (0x3f50624da5218a62, 0x3bbac761c3704423);
/// sin(100.0)
pub const SIN_100P0: (u64, u64) = (0xbfe03425b78c4db8, 0xbc4c23d8557420fb);
/// sin(12345.678)
pub const SIN_12345P678: (u64, u64) = (0xbfe687d5890974a5, 0xbc76a6c3056ad519);
/// cos(0.5)
pub const COS_0P5: (u64, u64) = (0x3fec1528065b7d50, 0xbc8892111312e828);
/// cos(1.0)
pub const COS_1P0: (u64, u64) = (0x3fe14a280fb5068c, 0xbc8b71edcc9344bc);
/// cos(3.0)
pub const COS_3P0: (u64, u64) = (0xbfefae04be85e5d2, 0xbc883effc17efb54);
/// cos(6.0)
pub const COS_6P0: (u64, u64) = (0x3feeb9b7097822f5, 0x3c8eba78f38003a5);
/// cos(0.001)
pub const COS_0P001: (u64, u64) = (0x3feffffef390876c, 0xbc620ee49f228c2c);
/// cos(100.0)
pub const COS_100P0: (u64, u64) = (0x3feb981dbf665fdf, 0x3c88fd0cdcd985e8);
/// cos(12345.678)
pub const COS_12345P678: (u64, u64) = (0x3fe6b94c3bbe24b8, 0xbc7c9c50dc8917f6);
/// tan(1.2)
pub const TAN_1P2: (u64, u64) = (0x400493c43acb164d, 0xbca767ad8ada14a2);
/// tan(0.5)
pub const TAN_0P5: (u64, u64) = (0x3fe17b4f5bf3474a, 0x3c80c5e59201e209);
/// atan(0.5)
pub const ATAN_0P5: (u64, u64) = (0x3fddac670561bb4f, 0x3c7a2b7f222f65e2);
/// atan(2.0)
pub const ATAN_2P0: (u64, u64) = (0x3ff1b6e192ebbe44, 0x3c9b1b466a88828e);
/// atan(-3.0)
pub const ATAN_M3P0: (u64, u64) = (0xbff3fc176b7a8560, 0x3c4441a3bd3f1083);
/// sqrt(2.0)
pub const SQRT_2P0: (u64, u64) = (0x3ff6a09e667f3bcd, 0xbc9bdd3413b26456);
/// sqrt(3.0)
pub const SQRT_3P0: (u64, u64) = (0x3ffbb67ae8584caa, 0x3c9cec95d0b5c1e3);
/// sqrt(0.5)
pub const SQRT_0P5: (u64, u64) = (0x3fe6a09e667f3bcd, 0xbc8bdd3413b26456);
/// sqrt(5.0)
pub const SQRT_5P0: (u64, u64) = (0x4001e3779b97f4a8, 0xbc9f506319fcfd19);
/// sinh(1.0)
pub const SINH_1P0: (u64, u64) = (0x3ff2cd9fc44eb982, 0x3c96a0092521fc19);
/// sinh(-2.5)
pub const SINH_M2P5: (u64, u64) = (0xc0183368cdb0b6d3, 0x3ca600682dc56987);
/// cosh(1.0)
pub const COSH_1P0: (u64, u64) = (0x3ff8b07551d9f550, 0x3c930af4a040065b);
/// cosh(-2.5)
pub const COSH_M2P5: (u64, u64) = (0x40188776e4b30aa3, 0x3cb9a72a3151f713);
/// tanh(0.7)
pub const TANH_0P7: (u64, u64) = (0x3fe356fb17af2e91, 0xbc8017b37671fc9f);
/// tanh(-3.7)
pub const TANH_M3P7: (u64, u64) = (0xbfeff5fdc948488c, 0x3c887a663d4ad689);
/// asin(0.5)
pub const ASIN_0P5: (u64, u64) = (0x3fe0c152382d7366, 0xbc8ee6913347c2a6);
/// asin(-0.8)
pub const ASIN_M0P8: (u64, u64) = (0xbfedac670561bb50, 0xbc6358a733684234);
/// acos(0.5)
pub const ACOS_0P5: (u64, u64) = (0x3ff0c152382d7366, 0xbc9ee6913347c2a6);
/// acos(-0.8)
pub const ACOS_M0P8: (u64, u64) = (0x4003fc176b7a8560, 0x3c94113b1981644d);
/// asinh(3.0)
pub const ASINH_3P0: (u64, u64) = (0x3ffd185b507edc0e, 0xbc404d61d27f1036);
/// asinh(-0.5)
pub const ASINH_M0P5: (u64, u64) = (0xbfdecc2caec5160a, 0x3c7ad07ef7ed5a5d);
/// acosh(2.0)
pub const ACOSH_2P0: (u64, u64) = (0x3ff5124271980435, 0xbc99065ed0bf9dcb);
/// acosh(1.5)
pub const ACOSH_1P5: (u64, u64) = (0x3feecc2caec5160a, 0xbc8ad07ef7ed5a5d);
/// atanh(0.5)
pub const ATANH_0P5: (u64, u64) = (0x3fe193ea7aad030b, 0xbc8a256f99caabeb);
/// atanh(-0.9)
pub const ATANH_M0P9: (u64, u64) = (0xbff78e360604b32d, 0x3c5d0b8ee7108685);
/// atan2(1.0, 1.0)
pub const ATAN2_1_1: (u64, u64) = (0x3fe921fb54442d18, 0x3c81a62633145c07);
/// atan2(0.3, -0.7)
pub const ATAN2_03_M07: (u64, u64) = (0x4005e4c36ca0118a, 0x3c9337ddd84b1129);
/// atan2(1.0, -1.0)
pub const ATAN2_1_M1: (u64, u64) = (0x4002d97c7f3321d2, 0x3c9a79394c9e8a0a);
/// atan2(-0.5, -0.5)
pub const ATAN2_M05_M05: (u64, u64) = (0xc002d97c7f3321d2, 0xbc9a79394c9e8a0a);
/// 1.82263465496624221439376821559
pub const SQRT2_POW_SQRT3: (u64, u64) = (0x3ffd2982f4ba2e19, 0xbc50ef63b7c27829);
/// 201.06192982974676726160917653
pub const PI_64: (u64, u64) = (0x406921fb54442d18, 0x3d01a62633145c07);
/// 15.1542622414792641897604302726
pub const E_POW_E: (u64, u64) = (0x402e4efb75e4527b, 0xbc94b19ffdc1b061);
/// 3814279.1047602205922092195941
pub const E_POW_E_POW_E: (u64, u64) = (0x414d19c38d68c86d, 0xbde44f9731953670);
/// 1618.17799191265350166869122548
pub const E_POW_E_SQ: (u64, u64) = (0x409948b643830f32, 0x3d3d7fcae239ebf0);
/// 0.367879441171442321595523770161
pub const INV_E: (u64, u64) = (0x3fd78b56362cef38, 0xbc6ca8a4270fadf5);
/// 1.71828182845904523536028747135
pub const E_MINUS_1: (u64, u64) = (0x3ffb7e151628aed3, 0xbc9655023a9dfd8c);
/// 1.77245385090551602729816748334
pub const SQRT_PI: (u64, u64) = (0x3ffc5bf891b4ef6b, 0xbc9618f13eb7ca89);
/// 1.64872127070012814684865078781
pub const SQRT_E: (u64, u64) = (0x3ffa61298e1e069c, 0xbc8b4690082a4906);
/// 1.83787706640934548356065947281
pub const LN_2PI: (u64, u64) = (0x3ffd67f1c864beb5, 0xbc965b5a1b7ff5df);
/// 1.82079632679489661923132169164
pub const HALF_PI_PLUS_HALF: (u64, u64) = (0x3ffd21fb54442d18, 0x3c91a62633145c07);
/// 1.82112670118596265181618856921
pub const TWO_POW_1_MINUS_LNLNPI: (u64, u64) = (0x3ffd2355c077750a, 0x3c4dfa7b4f17c5c7);
/// 1.82436063535006407342432539391
pub const HALF_2_PLUS_SQRTE: (u64, u64) = (0x3ffd3094c70f034e, 0xbc7b4690082a4906);
/// 1.82166285874192663229964396088
pub const TWO_POW_E_OVER_PI: (u64, u64) = (0x3ffd2587f42a26ad, 0x3c9178ceaa427d32);
/// 0.207879576350761908546955619835
pub const I_POW_I: (u64, u64) = (0x3fca9bcc46f767df, 0x3c5db6c56ddb1066);
/// 1.82236106954446459949604872578
pub const TWO_POW_HALF_POW_IPOWI: (u64, u64) = (0x3ffd286414b32725, 0x3c944a2bd8b507af);
/// 1.82241390969639786949931110176
pub const FOUR_MINUS_PI_LN2: (u64, u64) = (0x3ffd289b7cdebe92, 0x3c889a41f2f9eca2);
/// 1.82272213355546936603078216777
pub const SQRT_LN_PI_2POWPI: (u64, u64) = (0x3ffd29deaf150eaf, 0x3c91efc75239bf2e);
/// 1.82269033473768631264520091855
pub const LN4_POW_LN2PI: (u64, u64) = (0x3ffd29bd5726f041, 0xbc9347fe2a6ee3c2);
/// 9.86960440108935861883449099988
pub const PI_SQ: (u64, u64) = (0x4023bd3cc9be45de, 0x3cc692b71366cc04);
/// 36.4621596072079117709908260227
pub const PI_POW_PI: (u64, u64) = (0x40423b280bc73ebe, 0x3cec7f8c0a424c56);
/// 39.603752260797705009453469406
pub const PI_POW_PI_PLUS_PI: (u64, u64) = (0x4043cd47c10b8190, 0xbcb3308c94636f4f);
/// 114.549252756022876659293936868
pub const PI_POW_PI_TIMES_PI: (u64, u64) = (0x405ca326f50816cb, 0xbcf2b98218c16df0);
/// 229.098505512045753318587873737
pub const PI_POW_PI_TIMES_2PI: (u64, u64) = (0x406ca326f50816cb, 0xbd02b98218c16df0);
/// 187.473571970438700201275588914
pub const PI_POW_PI_TIMES_2_PLUS_PI: (u64, u64) = (0x40676f278067aac5, 0xbd0b1cfb073f90cd);
/// 170.987876031717223191730407943
pub const E_POW_2_PLUS_PI: (u64, u64) = (0x40655f9cae32174a, 0xbd0aac49bb0c1b31);
/// 7.38905609893065022723042746058
pub const E_SQ: (u64, u64) = (0x401d8e64b8d4ddae, 0xbca9e62e22efca4c);
/// 0.693147180559945309417232121458
pub const LN_2: (u64, u64) = (0x3fe62e42fefa39ef, 0x3c7abc9e3b39803f);
/// 6.28318530717958647692528676656
pub const TWO_PI: (u64, u64) = (0x401921fb54442d18, 0x3cb1a62633145c07);
/// 0.367879441171442321595523770161
pub const E_SELFINV_AT_E: (u64, u64) = (0x3fd78b56362cef38, 0xbc6ca8a4270fadf5);
/// 1.82263
pub const DEC_1P82263: (u64, u64) = (0x3ffd297e132b55ef, 0x3c7fddebd9018e75);
/// 201.06192983
pub const DEC_BLIND: (u64, u64) = (0x406921fb54444fe6, 0x3cec541e9038f2bb);
/// 1.82263465496624221439
pub const DEC_21DIG: (u64, u64) = (0x3ffd2982f4ba2e19, 0xbc50f3d69751d6fa);
/// 135.9118262145226739056
pub const MC_PRED_1: u64 = 0x4060fd2dae2b6055;
/// 74206.56718352648606807
pub const MC_PRED_5: u64 = 0x40f21de9132f0891;
/// 0.3070685790405477642244
pub const EL_CDF_HALF: u64 = 0x3fd3a702f826ef1a;
/// 0.6929314209594522357756
pub const EL_CDF_2: u64 = 0x3fe62c7e83ec8873;
/// 0.7649461597478895898859
pub const EL_CDF_3: u64 = 0x3fe87a705e6a2cdf;
/// 0.1283823141875414055445
pub const EL_PDF_AT_PARSED: u64 = 0x3fc06ed4e868ff2b;
/// 0.0000543506803435268960758
pub const EL_PDF_AT_BLIND: u64 = 0x3f0c7ed3281f3868;
