pub const CHISQ_TABLE: &[(u32, f64, f64)] = &[
    (1, 0.1, 0.24817036595415071751),
    (1, 0.5, 0.52049987781304653768),
    (1, 1.0, 0.68268949213708589717),
    (1, 2.0, 0.84270079294971486934),
    (1, 3.0, 0.91673548333644959815),
    (1, 5.0, 0.97465268132253173607),
    (1, 8.0, 0.99532226501895273416),
    (1, 12.0, 0.9994679944948607503),
    (1, 20.0, 0.99999225578356895592),
    (1, 30.0, 0.99999995679536942173),
    (1, 50.0, 0.99999999999846254021),
    (1, 75.0, 0.99999999999999999529),
    (1, 100.0, 1.0),
    (2, 0.1, 0.048770575499285990909),
    (2, 0.5, 0.22119921692859513175),
    (2, 1.0, 0.3934693402873665764),
    (2, 2.0, 0.6321205588285576784),
    (2, 3.0, 0.77686983985157017107),
    (2, 5.0, 0.91791500137610120483),
    (2, 8.0, 0.98168436111126581971),
    (2, 12.0, 0.99752124782333364158),
    (2, 20.0, 0.99995460007023751515),
    (2, 30.0, 0.99999969409767949817),
    (2, 50.0, 0.99999999998611205614),
    (2, 75.0, 0.99999999999999994824),
    (2, 100.0, 1.0),
    (3, 0.1, 0.0081625762681235215462),
    (3, 0.5, 0.081108588345324140636),
    (3, 1.0, 0.19874804309879919757),
    (3, 2.0, 0.427593295529120166),
    (3, 3.0, 0.60837482372891104452),
    (3, 5.0, 0.82820285570326686494),
    (3, 8.0, 0.95398829431076862645),
    (3, 12.0, 0.99261683949464023026),
    (3, 20.0, 0.99983025756444717357),
    (3, 30.0, 0.99999861994296870675),
    (3, 50.0, 0.99999999992010820755),
    (3, 75.0, 0.99999999999999963767),
    (3, 100.0, 1.0),
    (4, 0.1, 0.001209104274250290454),
    (4, 0.5, 0.026499021160743914694),
    (4, 1.0, 0.090204010431049864594),
    (4, 2.0, 0.26424111765711535681),
    (4, 3.0, 0.44217459962892542767),
    (4, 5.0, 0.71270250481635421691),
    (4, 8.0, 0.90842180555632909853),
    (4, 12.0, 0.98264873476333549104),
    (4, 20.0, 0.99950060077261266663),
    (4, 30.0, 0.99999510556287197079),
    (4, 50.0, 0.99999999963891345951),
    (4, 75.0, 0.99999999999999800741),
    (4, 100.0, 0.99999999999999999999),
    (5, 0.1, 0.00016231661192261501402),
    (5, 0.5, 0.0078767067673704077947),
    (5, 1.0, 0.037434226752703631043),
    (5, 2.0, 0.15085496391539036377),
    (5, 3.0, 0.3000141641213724909),
    (5, 5.0, 0.58411981300449207972),
    (5, 8.0, 0.84376437242227767254),
    (5, 12.0, 0.96521221949375815008),
    (5, 20.0, 0.99875026943696862459),
    (5, 30.0, 0.99998525141896155695),
    (5, 50.0, 0.9999999986142026633),
    (5, 75.0, 0.99999999999999069705),
    (5, 100.0, 0.99999999999999999995),
    (6, 0.1, 0.000020067493624397942639),
    (6, 0.5, 0.0021614966897625125609),
    (6, 1.0, 0.014387677966970686644),
    (6, 2.0, 0.080301397071394196011),
    (6, 3.0, 0.19115316946194187012),
    (6, 5.0, 0.456186884116670482),
    (6, 8.0, 0.76189669444645565618),
    (6, 12.0, 0.93803119558334103942),
    (6, 20.0, 0.99723060428448842406),
    (6, 30.0, 0.99996069155181551539),
    (6, 50.0, 0.99999999529893100171),
    (6, 75.0, 0.99999999999996161679),
    (6, 100.0, 0.99999999999999999975),
    (7, 0.1, 0.0000023114187985968833776),
    (7, 0.5, 0.00055351860957503451063),
    (7, 1.0, 0.0051714634834845177365),
    (7, 2.0, 0.040159631269898442883),
    (7, 3.0, 0.11499776835684935873),
    (7, 5.0, 0.3400367703057172945),
    (7, 8.0, 0.6674060974006921463),
    (7, 12.0, 0.89944113149164115766),
    (7, 20.0, 0.99443031692705442866),
    (7, 30.0, 0.99990504027491865816),
    (7, 50.0, 0.99999998555514722078),
    (7, 75.0, 0.99999999999985658775),
    (7, 100.0, 0.99999999999999999892),
    (8, 0.1, 0.00000025021394729973411639),
    (8, 0.5, 0.00013336965051406238315),
    (8, 1.0, 0.0017516225562908236521),
    (8, 2.0, 0.018988156876153809079),
    (8, 3.0, 0.065642454378450091342),
    (8, 5.0, 0.24242386686693403625),
    (8, 8.0, 0.56652987963329106638),
    (8, 12.0, 0.84879611722335213619),
    (8, 20.0, 0.98966394932407428213),
    (8, 30.0, 0.99978862149653323838),
    (8, 50.0, 0.99999995913241052003),
    (8, 75.0, 0.99999999999950673403),
    (8, 100.0, 0.99999999999999999573),
    (9, 0.1, 0.000000025630325396624368384),
    (9, 0.5, 0.000030433741161079276047),
    (9, 1.0, 0.00056249730216750154992),
    (9, 2.0, 0.008532393371186465486),
    (9, 3.0, 0.03570502731491087351),
    (9, 5.0, 0.16569173980659244791),
    (9, 8.0, 0.46585378309030868773),
    (9, 12.0, 0.78669069491658345637),
    (9, 20.0, 0.98208759547015672602),
    (9, 30.0, 0.99956127822902052051),
    (9, 50.0, 0.99999989227617977425),
    (9, 75.0, 0.99999999999841970241),
    (9, 100.0, 0.99999999999999998426),
    (10, 0.1, 0.0000000024979513360065098603),
    (10, 0.5, 0.0000066117105610342470462),
    (10, 1.0, 0.00017211562995584077811),
    (10, 2.0, 0.0036598468273437123455),
    (10, 3.0, 0.018575936222140674301),
    (10, 5.0, 0.10882198108584875765),
    (10, 8.0, 0.37116306482012647658),
    (10, 12.0, 0.71494349968336878135),
    (10, 20.0, 0.97074731192303892733),
    (10, 30.0, 0.99914335878922469961),
    (10, 50.0, 0.99999973309165750955),
    (10, 75.0, 0.99999999999524220811),
    (10, 100.0, 0.9999999999999999455),
    (11, 0.1, 0.0000000002326756943992682823),
    (11, 0.5, 0.0000013734706936373185704),
    (11, 1.0, 0.000050389948687833084735),
    (11, 2.0, 0.0015041182825838038422),
    (11, 3.0, 0.0092741136342647117705),
    (11, 5.0, 0.068833389529300866474),
    (11, 8.0, 0.28669617036996783567),
    (11, 12.0, 0.63635677948317318798),
    (11, 20.0, 0.95465932556593960904),
    (11, 30.0, 0.99841540474269339501),
    (11, 50.0, 0.99999937405969396019),
    (11, 75.0, 0.99999999998644565794),
    (11, 100.0, 0.99999999999999982142),
    (12, 0.1, 0.000000000020791376369233794987),
    (12, 0.5, 0.0000002738135633828402408),
    (12, 1.0, 0.000014164937322342490715),
    (12, 2.0, 0.00059418481758169299883),
    (12, 3.0, 0.0044559807752478491891),
    (12, 5.0, 0.042021038195306118354),
    (12, 8.0, 0.21486961296959480474),
    (12, 12.0, 0.55432035863538875554),
    (12, 20.0, 0.93291403712096821771),
    (12, 30.0, 0.99720757066729908329),
    (12, 50.0, 0.99999860288789245714),
    (12, 75.0, 0.99999999996325826376),
    (12, 100.0, 0.99999999999999944322),
    (13, 0.1, 0.0000000000017879698335855540956),
    (13, 0.5, 0.000000052549308753593230558),
    (13, 1.0, 0.0000038347347351359515364),
    (13, 2.0, 0.00022625008465604717964),
    (13, 3.0, 0.0020656826304521222053),
    (13, 5.0, 0.024806866675986511276),
    (13, 8.0, 0.15639972475517448872),
    (13, 12.0, 0.47235614446490744065),
    (13, 20.0, 0.90478974392190848726),
    (13, 30.0, 0.99529029523452850727),
    (13, 50.0, 0.99999701853021298716),
    (13, 75.0, 0.99999999990480444562),
    (13, 100.0, 0.99999999999999834097),
    (14, 0.1, 0.00000000000014837670558982777536),
    (14, 0.5, 0.000000009734521814031623914),
    (14, 1.0, 0.0000010023796028843000985),
    (14, 2.0, 0.000083241149288023107722),
    (14, 3.0, 0.00092599191352464291104),
    (14, 5.0, 0.014187311990913351979),
    (14, 8.0, 0.11067397840257369018),
    (14, 12.0, 0.39369721758740872972),
    (14, 20.0, 0.86985857911751703503),
    (14, 30.0, 0.9923681003624850425),
    (14, 50.0, 0.9999938937055380721),
    (14, 75.0, 0.99999999976335861153),
    (14, 100.0, 0.99999999999999525757),
    (15, 0.1, 0.000000000000011910413849533109391),
    (15, 0.5, 0.0000000017446401042191790253),
    (15, 1.0, 0.00000025356443108232590575),
    (15, 2.0, 0.000029654977282546154636),
    (15, 3.0, 0.00040219855264921692099),
    (15, 5.0, 0.0078735886554809900456),
    (15, 8.0, 0.076217296684532429052),
    (15, 12.0, 0.32097094290958521234),
    (15, 20.0, 0.82806731062339906914),
    (15, 30.0, 0.98807850406184030479),
    (15, 50.0, 0.99998795880144001399),
    (15, 75.0, 0.99999999943379745145),
    (15, 100.0, 0.99999999999998695296),
    (16, 0.1, 0.00000000000000092670799237086671136),
    (16, 0.5, 0.00000000030312747228845902508),
    (16, 1.0, 0.000000062196908637286483022),
    (16, 2.0, 0.000010249196674641694707),
    (16, 3.0, 0.00016956572886967013718),
    (16, 5.0, 0.0042466954893445068457),
    (16, 8.0, 0.051133615792847339006),
    (16, 12.0, 0.25602023954628299331),
    (16, 20.0, 0.77977935339830105976),
    (16, 30.0, 0.9819978068521692408),
    (16, 50.0, 0.99997707519712955408),
    (16, 75.0, 0.99999999869246761745),
    (16, 100.0, 0.99999999999996536003),
    (17, 0.1, 0.000000000000000070017717959636149707),
    (17, 0.5, 0.000000000051151149240043974235),
    (17, 1.0, 0.000000014819744145417530376),
    (17, 2.0, 0.0000034422962994126846358),
    (17, 3.0, 0.000069501737088635864136),
    (17, 5.0, 0.0022291626486458163022),
    (17, 8.0, 0.033453335046856663898),
    (17, 12.0, 0.1998627816653274297),
    (17, 20.0, 0.72577073289205317831),
    (17, 30.0, 0.97365492171646389984),
    (17, 50.0, 0.99995775970553010343),
    (17, 75.0, 0.99999999707876248062),
    (17, 100.0, 0.99999999999991103284),
    (18, 0.1, 0.0000000000000000051455073867610322864),
    (18, 0.5, 0.0000000000083963991089851222999),
    (18, 1.0, 0.000000003435490246848132056),
    (18, 2.0, 0.0000011252025979690180803),
    (18, 3.0, 0.000027735819246862742077),
    (18, 5.0, 0.0011402528326042427414),
    (18, 8.0, 0.021363434487984163417),
    (18, 12.0, 0.152762506015438691),
    (18, 20.0, 0.66718032124928109067),
    (18, 30.0, 0.96255350652032711262),
    (18, 50.0, 0.99992451735835293529),
    (18, 75.0, 0.99999999367266608269),
    (18, 100.0, 0.99999999999977850043),
    (19, 0.1, 0.00000000000000000036832895038042475926),
    (19, 0.5, 0.0000000000013426505641870609673),
    (19, 1.0, 0.00000000077593903148174358942),
    (19, 2.0, 0.00000035845147786757051811),
    (19, 3.0, 0.00001079053434265097175),
    (19, 5.0, 0.00056903735251782402473),
    (19, 8.0, 0.013329117805597480296),
    (19, 12.0, 0.11437466784585134783),
    (19, 20.0, 0.6054218179139991891),
    (19, 30.0, 0.94820154110697612639),
    (19, 50.0, 0.99986893883520683705),
    (19, 75.0, 0.99999998668890231519),
    (19, 100.0, 0.99999999999946444392),
    (20, 0.1, 0.000000000000000000025715803516000736056),
    (20, 0.5, 0.0000000000002094248539997361116),
    (20, 1.0, 0.00000000017096700293489033565),
    (20, 2.0, 0.00000011142547833872067735),
    (20, 3.0, 0.0000040975009763948428936),
    (20, 5.0, 0.00027735209462083604578),
    (20, 8.0, 0.0081322427969338631557),
    (20, 12.0, 0.083924016994875822797),
    (20, 20.0, 0.54207028552814779169),
    (20, 30.0, 0.93014633930059023231),
    (20, 50.0, 0.99977852336175121642),
    (20, 75.0, 0.99999997275682635456),
    (20, 100.0, 0.99999999999874039154),
    (21, 0.1, 0.0000000000000000000017532187527630490136),
    (21, 0.5, 0.00000000000003190059903293167079),
    (21, 1.0, 0.000000000036791393906175863804),
    (21, 2.0, 0.000000033836233494400610985),
    (21, 3.0, 0.0000015203444353901992678),
    (21, 5.0, 0.00013216227458940500434),
    (21, 8.0, 0.0048557631776988766743),
    (21, 12.0, 0.060382174907234875071),
    (21, 20.0, 0.4787387495160476215),
    (21, 30.0, 0.9080119927762059578),
    (21, 50.0, 0.99963519970277718871),
    (21, 75.0, 0.999999945676296399),
    (21, 100.0, 0.99999999999711397595),
    (22, 0.1, 0.00000000000000000000011684559977557830425),
    (22, 0.5, 0.0000000000000047504976251014568942),
    (22, 1.0, 0.0000000000077408407392282496297),
    (22, 2.0, 0.000000010047766375690937054),
    (22, 3.0, 0.00000055175323582465801607),
    (22, 5.0, 0.000061626910124984371868),
    (22, 8.0, 0.0028397661205137430511),
    (22, 12.0, 0.042620923582538101874),
    (22, 20.0, 0.4169602498070144927),
    (22, 30.0, 0.88153558847098491185),
    (22, 50.0, 0.99941353837024691924),
    (22, 75.0, 0.99999989432242737407),
    (22, 100.0, 0.99999999999354984708),
    (23, 0.1, 0.0000000000000000000000076200307265646790425),
    (23, 0.5, 0.00000000000000069226652926192563524),
    (23, 1.0, 0.0000000000015938873549583530597),
    (23, 2.0, 0.0000000029204959350510960202),
    (23, 3.0, 0.0000001960315914958031989),
    (23, 5.0, 0.000028144398892162380443),
    (23, 8.0, 0.0016278185575470276755),
    (23, 12.0, 0.029529321799454033494),
    (23, 20.0, 0.35808820818466517618),
    (23, 30.0, 0.85059835230367714552),
    (23, 50.0, 0.99907867795889707359),
    (23, 75.0, 0.9999997992027038412),
    (23, 100.0, 0.99999999998592127129),
    (24, 0.1, 0.00000000000000000000000048670015637304173747),
    (24, 0.5, 0.000000000000000098807707496123832672),
    (24, 1.0, 0.00000000000032146973033451844707),
    (24, 2.0, 0.00000000083161074268823339095),
    (24, 3.0, 0.000000068242180292360078227),
    (24, 5.0, 0.000012598459103199900525),
    (24, 8.0, 0.00091522914727006301301),
    (24, 12.0, 0.020091963539444799552),
    (24, 20.0, 0.30322385369689331181),
    (24, 30.0, 0.81524820097606856576),
    (24, 50.0, 0.99858402702591897112),
    (24, 75.0, 0.99999962693243084966),
    (24, 100.0, 0.99999999996995646318),
    (25, 0.1, 0.000000000000000000000000030471065536486283739),
    (25, 0.5, 0.000000000000000013824518312583349267),
    (25, 1.0, 0.000000000000063560983166287375179),
    (25, 2.0, 0.00000000023217092989026863203),
    (25, 3.0, 0.00000002329513359653414644),
    (25, 5.0, 0.0000055318172188487665512),
    (25, 8.0, 0.0005050552114072541107),
    (25, 12.0, 0.01343218104756837702),
    (25, 20.0, 0.2531746939834630498),
    (25, 30.0, 0.77571099516559608602),
    (25, 50.0, 0.99786884808089682335),
    (25, 75.0, 0.9999993215714237614),
    (25, 100.0, 0.99999999993725733799),
    (26, 0.1, 0.000000000000000000000000001871407959686477016),
    (26, 0.5, 0.0000000000000000018975008793460605561),
    (26, 1.0, 0.000000000000012329271630612981132),
    (26, 2.0, 0.000000000063597773271341418993),
    (26, 3.0, 0.0000000078032983508228359967),
    (26, 5.0, 0.0000023841984736614689956),
    (26, 8.0, 0.00027371682285550300033),
    (26, 12.0, 0.0088274835178981483912),
    (26, 20.0, 0.20844352360512566106),
    (26, 30.0, 0.73238896660742313316),
    (26, 50.0, 0.99685587839190241252),
    (26, 75.0, 0.99999879133869171087),
    (26, 100.0, 0.9999999998716506969),
    (27, 0.1, 0.00000000000000000000000000011282689237351270334),
    (27, 0.5, 0.00000000000000000025567809359650354773),
    (27, 1.0, 0.0000000000000023479282946047477979),
    (27, 2.0, 0.000000000017104929477402440977),
    (27, 3.0, 0.000000002566758648621860145),
    (27, 5.0, 0.0000010093008841860437729),
    (27, 8.0, 0.00014577094064252656997),
    (27, 12.0, 0.0057055534866632619119),
    (27, 20.0, 0.16924388262250134871),
    (27, 30.0, 0.68584616659989881462),
    (27, 50.0, 0.99544918832489632286),
    (27, 75.0, 0.99999788867758352201),
    (27, 100.0, 0.99999999974260160478),
    (28, 0.1, 6.6820042504952449895e-30),
    (28, 0.5, 0.000000000000000000033843059792641861522),
    (28, 1.0, 0.00000000000000043925398815507859586),
    (28, 2.0, 0.0000000000045198525469651134581),
    (28, 3.0, 0.0000000008295812037223849701),
    (28, 5.0, 0.0000004199175833656167783),
    (28, 8.0, 0.000076328415343330688732),
    (28, 12.0, 0.0036284927387227709323),
    (28, 20.0, 0.13553557738068900664),
    (28, 30.0, 0.63678215772052455708),
    (28, 50.0, 0.99353251563417826138),
    (28, 75.0, 0.99999638097213650282),
    (28, 100.0, 0.99999999949355159584),
    (29, 0.1, 3.8897146939132913838e-31),
    (29, 0.5, 0.0000000000000000000044032747263767751483),
    (29, 1.0, 0.000000000000000080778114172057894923),
    (29, 2.0, 0.0000000000011741146320049453433),
    (29, 3.0, 0.00000000026360587663160611216),
    (29, 5.0, 0.00000017179785924850251767),
    (29, 8.0, 0.000039316341897422113451),
    (29, 12.0, 0.0022714967929276551973),
    (29, 20.0, 0.10707291124401119975),
    (29, 30.0, 0.58599635708245740196),
    (29, 50.0, 0.99096833692489539602),
    (29, 75.0, 0.99999390841691619038),
    (29, 100.0, 0.99999999902165444477),
    (30, 0.1, 2.2268695366738664623e-32),
    (30, 0.5, 0.00000000000000000000056345587204509911957),
    (30, 1.0, 0.000000000000000014610500924439219562),
    (30, 2.0, 0.00000000000030000106665252020554),
    (30, 3.0, 0.000000000082397223675908074403),
    (30, 5.0, 0.000000069153138669928882362),
    (30, 8.0, 0.000019931727482710028277),
    (30, 12.0, 0.0014003538333618948785),
    (30, 20.0, 0.083458472934662824911),
    (30, 30.0, 0.53434629105599036842),
    (30, 50.0, 0.98759793928109942005),
    (30, 75.0, 0.9999899246331493384),
    (30, 100.0, 0.99999999814319766349),
    (31, 0.1, 1.2545007564278480191e-33),
    (31, 0.5, 0.000000000000000000000070950263098727345087),
    (31, 1.0, 0.0000000000000000026005217433444499929),
    (31, 2.0, 0.000000000000075437746115462885822),
    (31, 3.0, 0.000000000025348693322269488073),
    (31, 5.0, 0.0000000274007859834091978),
    (31, 8.0, 0.000009949556036703642689),
    (31, 12.0, 0.00085050781620947310851),
    (31, 20.0, 0.064196379258845579774),
    (31, 30.0, 0.48270345068510421644),
    (31, 50.0, 0.98324273106282483251),
    (31, 75.0, 0.99998361463932826374),
    (31, 100.0, 0.99999999653562975506),
    (32, 0.1, 6.9576849643643540079e-35),
    (32, 0.5, 0.0000000000000000000000087958067018197461975),
    (32, 1.0, 0.00000000000000000045571801675124035272),
    (32, 2.0, 0.000000000000018677634631680655377),
    (32, 3.0, 0.0000000000076788256712603848324),
    (32, 5.0, 0.000000010692397887314233039),
    (32, 8.0, 0.0000048926107198778521554),
    (32, 12.0, 0.00050909827121754445699),
    (32, 20.0, 0.048740403303978703759),
    (32, 30.0, 0.43191042439145617976),
    (32, 50.0, 0.97770697869263468449),
    (32, 75.0, 0.99997378378568142735),
    (32, 100.0, 0.99999999364201788898),
    (33, 0.1, 3.8008576055857921796e-36),
    (33, 0.5, 0.0000000000000000000000010740620781136708424),
    (33, 1.0, 0.000000000000000000078663923063371124143),
    (33, 2.0, 0.000000000000004555366380657565983),
    (33, 3.0, 0.0000000000022915465503982018714),
    (33, 5.0, 0.0000000041109354567812429819),
    (33, 8.0, 0.0000023710306532924244277),
    (33, 12.0, 0.00030044756715727359027),
    (33, 20.0, 0.036534100558738728179),
    (33, 30.0, 0.38274257352637532724),
    (33, 50.0, 0.97078207644658198814),
    (33, 75.0, 0.9999587103387123122),
    (33, 100.0, 0.99999998851619527213),
    (34, 0.1, 2.0460427772159919464e-37),
    (34, 0.5, 0.00000000000000000000000012924318083100598856),
    (34, 1.0, 0.000000000000000000013381050885991002419),
    (34, 2.0, 0.0000000000000010949201303781834912),
    (34, 3.0, 0.00000000000067397585832466393523),
    (34, 5.0, 0.0000000015579071400306940826),
    (34, 8.0, 0.0000011328315291698081251),
    (34, 12.0, 0.00017487743541341304892),
    (34, 20.0, 0.027041609784801128039),
    (34, 30.0, 0.33587679939345537789),
    (34, 50.0, 0.96225235277315853519),
    (34, 75.0, 0.99993595367442851084),
    (34, 100.0, 0.99999997957583109365),
    (35, 0.1, 1.0857912184997552448e-38),
    (35, 0.5, 0.000000000000000000000000015331759619524262969),
    (35, 1.0, 0.0000000000000000000022439891154596432724),
    (35, 2.0, 0.00000000000000025946457854815265945),
    (35, 3.0, 0.00000000000019544229840990312575),
    (35, 5.0, 0.00000000058217022547397710044),
    (35, 8.0, 0.00000053381237852606848559),
    (35, 12.0, 0.00010042565841101922),
    (35, 20.0, 0.019769083164734575697),
    (35, 30.0, 0.2918690488366217916),
    (35, 50.0, 0.95190229672500192091),
    (35, 75.0, 0.99990210965549424051),
    (35, 100.0, 0.99999996421487865719),
    (36, 0.1, 5.6826193947583909516e-40),
    (36, 0.5, 0.000000000000000000000000001793717287053926665),
    (36, 1.0, 0.00000000000000000000037114012524837446861),
    (36, 2.0, 0.000000000000000060642806772155733195),
    (36, 3.0, 0.000000000000055900874830335620768),
    (36, 5.0, 0.00000000021459967719487953018),
    (36, 8.0, 0.00000024817760194438600028),
    (36, 12.0, 0.000056917140423719610776),
    (36, 20.0, 0.014277613597049612909),
    (36, 30.0, 0.25114124792463114095),
    (36, 50.0, 0.93952496171510537446),
    (36, 75.0, 0.99985250489960590088),
    (36, 100.0, 0.99999993820469346032),
    (37, 0.1, 2.9341632423853512852e-41),
    (37, 0.5, 0.00000000000000000000000000020704078389359754815),
    (37, 1.0, 0.000000000000000000000060562431233600961786),
    (37, 2.0, 0.000000000000000013984475570471898099),
    (37, 3.0, 0.000000000000015776219668048947556),
    (37, 5.0, 0.000000000078060906715796260233),
    (37, 8.0, 0.00000011387677286518712738),
    (37, 12.0, 0.000031846718269446293053),
    (37, 20.0, 0.010189073225303631421),
    (37, 30.0, 0.21397745624540447533),
    (37, 50.0, 0.92493118283703039629),
    (37, 75.0, 0.99978082247716980118),
    (37, 100.0, 0.99999989478254547165),
    (38, 0.1, 1.4952289699408853215e-42),
    (38, 0.5, 0.000000000000000000000000000023585848943481360836),
    (38, 1.0, 0.0000000000000000000000097537152277459144361),
    (38, 2.0, 0.0000000000000000031829554607097466407),
    (38, 3.0, 0.0000000000000043946262058082612298),
    (38, 5.0, 0.000000000028029196245460842335),
    (38, 8.0, 0.000000051587840338736639219),
    (38, 12.0, 0.000017597042093821798062),
    (38, 20.0, 0.0071865046038543267259),
    (38, 30.0, 0.18052828836727761016),
    (38, 50.0, 0.90795914080114265122),
    (38, 75.0, 0.99967865328539213014),
    (38, 100.0, 0.99999982328486670107),
    (39, 0.1, 7.5225525005677893092e-44),
    (39, 0.5, 2.6526915202101775971e-30),
    (39, 1.0, 0.0000000000000000000000015508992274917101486),
    (39, 2.0, 0.00000000000000000071528081492158667456),
    (39, 3.0, 0.0000000000000012086997700607709458),
    (39, 5.0, 0.0000000000099380258025285791233),
    (39, 8.0, 0.000000023079885154726293179),
    (39, 12.0, 0.0000096048998451523707993),
    (39, 20.0, 0.0050106894742598777586),
    (39, 30.0, 0.1508221109011742189),
    (39, 50.0, 0.88848373163706887655),
    (39, 75.0, 0.99953497008867431605),
    (39, 100.0, 0.99999970712759091613),
    (40, 0.1, 3.7376265043110851252e-45),
    (40, 0.5, 2.9464581044918578163e-31),
    (40, 1.0, 0.00000000000000000000000024354654299253143159),
    (40, 2.0, 0.00000000000000000015875276010732629572),
    (40, 3.0, 0.00000000000000032834341966136442414),
    (40, 5.0, 0.0000000000034804487521162781455),
    (40, 8.0, 0.000000010200522105968352679),
    (40, 12.0, 0.000005180168937011962468),
    (40, 20.0, 0.0034543419758568076822),
    (40, 30.0, 0.1247812150325248227),
    (40, 50.0, 0.86642516591434959432),
    (40, 75.0, 0.99933552509944389842),
    (40, 100.0, 0.99999952086426996619),
];
