// Generated by tools/gen_lebedev.py; do not edit by hand.
use super::OrbitKind::{self, *};

/// Orbit kind and its generator parameters `(a, b, weight)`.
type Orbit = (OrbitKind, f64, f64, f64);

pub(super) static RULES: &[(usize, usize, &[Orbit])] = &[
    (6, 3, &[
        (A1, 0.0, 0.0, 2.0943951023931953),
    ]),
    (14, 5, &[
        (A1, 0.0, 0.0, 0.8377580409572781),
        (A3, 0.0, 0.0, 0.9424777960769379),
    ]),
    (26, 7, &[
        (A1, 0.0, 0.0, 0.5983986006837702),
        (A2, 0.0, 0.0, 0.4787188805470161),
        (A3, 0.0, 0.0, 0.4039190554615448),
    ]),
    (38, 9, &[
        (A1, 0.0, 0.0, 0.11967972013675403),
        (A3, 0.0, 0.0, 0.4039190554615448),
        (C, 0.8880738339771153, 0.4597008433809831, 0.35903916041026207),
    ]),
    (50, 11, &[
        (A1, 0.0, 0.0, 0.1595729601823387),
        (A2, 0.0, 0.0, 0.2836852625463799),
        (A3, 0.0, 0.0, 0.2650718801466388),
        (B, 0.3015113445777636, 0.9045340337332909, 0.2535056108973113),
    ]),
    (74, 13, &[
        (A1, 0.0, 0.0, 0.006447392330599543),
        (A2, 0.0, 0.0, 0.20865289186971622),
        (A3, 0.0, 0.0, -0.37178913059528557),
        (B, 0.4803844614152614, 0.7337993857053428, 0.3339664677183728),
        (C, 0.9471562213625879, 0.3207726489807764, 0.2076237240608466),
    ]),
    (86, 15, &[
        (A1, 0.0, 0.0, 0.14506632743848966),
        (A3, 0.0, 0.0, 0.15009158815708185),
        (B, 0.3696028464541502, 0.8525183117012676, 0.13961936079092704),
        (B, 0.6943540066026664, 0.18906355288539498, 0.14924451686907017),
        (C, 0.9273306571511725, 0.3742430390903412, 0.14843778669298519),
    ]),
    (110, 17, &[
        (A1, 0.0, 0.0, 0.04810746585139659),
        (A3, 0.0, 0.0, 0.12307173528167016),
        (B, 0.1851156353447362, 0.9651240350865941, 0.10319173408833039),
        (B, 0.3956894730559419, 0.8287699812525923, 0.12058024902852787),
        (B, 0.6904210483822922, 0.21595729184584844, 0.12494509687251329),
        (C, 0.8781589106040661, 0.4783690288121502, 0.12183091738552136),
    ]),
    (146, 19, &[
        (A1, 0.0, 0.0, 0.007535190013117138),
        (A2, 0.0, 0.0, 0.09265184700375431),
        (A3, 0.0, 0.0, 0.09061000833610514),
        (B, 0.1574676672039082, 0.9748886436771732, 0.09518264418191037),
        (B, 0.4174961227965453, 0.8070898183595826, 0.08487112439121475),
        (B, 0.6764410400114264, 0.2912988822095268, 0.08942676055004592),
        (D, 0.8822700112603227, 0.4493328323269557, 0.08785259467896815),
    ]),
    (170, 21, &[
        (A1, 0.0, 0.0, 0.06967855090540039),
        (A2, 0.0, 0.0, 0.0762946177193528),
        (A3, 0.0, 0.0, 0.080219623085526),
        (B, 0.2551252621114134, 0.9326425903126906, 0.06513636946550791),
        (B, 0.431891069671941, 0.7917955593934921, 0.07793248373075363),
        (B, 0.6743601460362766, 0.3007935951377015, 0.07939343745253054),
        (C, 0.9652324219764484, 0.2613931360335988, 0.06882781368562169),
        (D, 0.8544158046846588, 0.4990453161796037, 0.0750009251580083),
    ]),
    (194, 23, &[
        (A1, 0.0, 0.0, 0.022397550621038466),
        (A2, 0.0, 0.0, 0.07184075893484736),
        (A3, 0.0, 0.0, 0.07003719860124849),
        (B, 0.1299335447650067, 0.9829723027072532, 0.05160728216651316),
        (B, 0.2892465627575439, 0.9125090968674737, 0.06482032680351046),
        (B, 0.4446933178717437, 0.7774932193147671, 0.069350927593711),
        (B, 0.6712973442695226, 0.3141969941825863, 0.07048105416807013),
        (C, 0.9383192181375916, 0.3457702197611283, 0.06348336993464156),
        (D, 0.8360360154824589, 0.525118572443642, 0.06949515747104322),
    ]),
    (230, 25, &[
        (A1, 0.0, 0.0, -0.693995400009484),
        (A3, 0.0, 0.0, 0.05592380005282852),
        (B, 0.0403854405009766, 0.9983676839677275, 0.21671263449840297),
        (B, 0.2520419490210201, 0.9343177788458117, 0.06344953354748642),
        (B, 0.4492044687397611, 0.772289253148364, 0.05650897145337109),
        (B, 0.658740524346096, 0.3634856849567271, 0.055309631794969366),
        (B, 0.6981906658447242, 0.1583022054634783, 0.04996901686874941),
        (C, 0.8129136531733653, 0.5823842309715584, 0.053169358276410394),
        (C, 0.935022745880593, 0.3545877390518688, 0.06532087239116488),
        (D, 0.8436365210688943, 0.4864661535886647, 0.05900817004291972),
    ]),
    (266, 27, &[
        (A1, 0.0, 0.0, -0.0165093097556937),
        (A2, 0.0, 0.0, -0.031701543864744726),
        (A3, 0.0, 0.0, 0.05261355758561784),
        (B, 0.1012526248572414, 0.9896948074629054, 0.05085789103954399),
        (B, 0.3277420654971629, 0.8860983449974991, 0.04518345242576232),
        (B, 0.4647448726420539, 0.7536739392508157, 0.05167897791314544),
        (B, 0.6620338663699974, 0.3513151285646334, 0.05348412394543959),
        (B, 0.7039373391585475, 0.0945750764037131, 0.06679237068674555),
        (C, 0.8506508083520399, 0.5257311121191337, 0.05315050376041538),
        (D, 0.8193433888191203, 0.5244939240922365, 0.05116357072843307),
        (D, 0.9392279297499158, 0.3233484542692899, 0.05128228060656845),
    ]),
    (302, 29, &[
        (A1, 0.0, 0.0, 0.010739109397555787),
        (A3, 0.0, 0.0, 0.04522786682091873),
        (B, 0.09618308522614784, 0.9907056213794081, 0.029557378086976182),
        (B, 0.2219645236294178, 0.9494543172264431, 0.0390682571589194),
        (B, 0.3515640345570105, 0.8676436245440834, 0.04335131988095388),
        (B, 0.4729054132581005, 0.7434520429875557, 0.04494651051683867),
        (B, 0.6566329410219612, 0.37103417838482095, 0.04529953680846059),
        (B, 0.7011766416089545, 0.12923867271051442, 0.04586782837866035),
        (C, 0.8203264198277593, 0.5718955891878961, 0.045249250350174325),
        (C, 0.964408914879206, 0.2644152887060663, 0.03747725210708425),
        (D, 0.8000727494073951, 0.5448677372580774, 0.044881302269213164),
        (D, 0.9024425295330004, 0.4127724083168531, 0.0426290524077215),
    ]),
    (350, 31, &[
        (A1, 0.0, 0.0, 0.03778452231568863),
        (A3, 0.0, 0.0, 0.03833531885829462),
        (B, 0.1927533154878019, 0.9621290551360144, 0.037585920632408995),
        (B, 0.3608302115520091, 0.860001812127547, 0.034200184856835694),
        (B, 0.4794682625712025, 0.7349968505877456, 0.03777075881540511),
        (B, 0.6498486161496169, 0.3941998886058389, 0.038120258621934286),
        (B, 0.6930357961327123, 0.19850131122336542, 0.037475061549118255),
        (B, 0.7068965463912316, 0.024383301669355525, 0.02037140121187405),
        (C, 0.924966152698679, 0.3800494919899303, 0.036215835299457516),
        (C, 0.9811407828432572, 0.1932945013230339, 0.03779900890017292),
        (D, 0.7934537856582315, 0.5351230477182762, 0.037175818344863526),
        (D, 0.8280801506686862, 0.5521820743493993, 0.038151752844447995),
        (D, 0.9074658265305127, 0.37800918987448673, 0.03559031656705769),
    ]),
    (434, 35, &[
        (A1, 0.0, 0.0, 0.0066173225486109225),
        (A2, 0.0, 0.0, 0.03202187657509671),
        (A3, 0.0, 0.0, 0.03157071178715079),
        (B, 0.07568084367178018, 0.9942559126312779, 0.01837826200283551),
        (B, 0.1774836054609158, 0.9679871587914728, 0.025312176697590755),
        (B, 0.2861289010307638, 0.9144728011208725, 0.028936516045220798),
        (B, 0.3927259763368002, 0.8315844004192323, 0.030729468903784314),
        (B, 0.4914342637784746, 0.7190165010408435, 0.0314376056414214),
        (B, 0.6456664707424256, 0.40771266489776975, 0.03158264676889633),
        (B, 0.6909346307509111, 0.21264682470755186, 0.031797991969690964),
        (C, 0.8818132877794288, 0.471598691151316, 0.030378476831136317),
        (C, 0.9776428111182649, 0.2102725228573068, 0.024013722037852854),
        (D, 0.7717462626915901, 0.5550152361076807, 0.03137375448165044),
        (D, 0.7999278543857286, 0.5905157048925271, 0.03156969938549682),
        (D, 0.8689460322872412, 0.4502330382582625, 0.030372038685964664),
        (D, 0.9371809858553722, 0.3344363145343455, 0.028106042036613862),
    ]),
    (590, 41, &[
        (A1, 0.0, 0.0, 0.0038894441293212977),
        (A3, 0.0, 0.0, 0.02327768981109099),
        (B, 0.06095034115507196, 0.9962781297540164, 0.012270220422136902),
        (B, 0.1459036449157763, 0.9784805837626939, 0.01740112129664928),
        (B, 0.2384736701421887, 0.9414141582204025, 0.020322468354886613),
        (B, 0.3317920736472123, 0.8830787279341326, 0.021985677897179274),
        (B, 0.4215761784010967, 0.8028368773352738, 0.022851590316146093),
        (B, 0.5044419707800358, 0.700768575373573, 0.023206517124447174),
        (B, 0.6372546939258752, 0.4333738687771544, 0.023273280644847585),
        (B, 0.6807744066455244, 0.2703560883591648, 0.02335852785125307),
        (B, 0.7040954938227469, 0.09219040707689825, 0.02352161488565242),
        (C, 0.791101929626902, 0.6116843442009876, 0.02333777588926989),
        (C, 0.918045287711454, 0.3964755348199858, 0.021427597073266098),
        (C, 0.9850133350280019, 0.1724782009907724, 0.016340324222732416),
        (D, 0.7493106119041159, 0.561026380862206, 0.023158143091304723),
        (D, 0.7803207424799203, 0.598412649788538, 0.023245656396302772),
        (D, 0.8400474883590504, 0.474239284255198, 0.022652880260672824),
        (D, 0.8593798558907212, 0.5033564271075117, 0.02264760481825463),
        (D, 0.9092134750923736, 0.3791035407695563, 0.021537559233923493),
        (D, 0.9571020743100725, 0.2778673190586244, 0.019543390524777292),
    ]),
    (770, 47, &[
        (A1, 0.0, 0.0, 0.0027557323015911473),
        (A2, 0.0, 0.0, 0.018050757198156134),
        (A3, 0.0, 0.0, 0.01786862935843413),
        (B, 0.0508720441050236, 0.997408677652823, 0.008542773952204923),
        (B, 0.1228198790178831, 0.9847997535723012, 0.012457274706913858),
        (B, 0.2026890814408786, 0.9580366759833914, 0.014830929034450439),
        (B, 0.2847745156464294, 0.9153179504831548, 0.01629355113817948),
        (B, 0.3656719078978026, 0.8559019286978865, 0.017164046568628008),
        (B, 0.4428264886713469, 0.7796213195276351, 0.01763047477532942),
        (B, 0.5140619627249735, 0.6866444472641543, 0.017827225922558868),
        (B, 0.6306401219166803, 0.4523119203136584, 0.017861546920738307),
        (B, 0.6716883332022612, 0.31252130500165326, 0.017894467464560658),
        (B, 0.6979792685336881, 0.16015580349882902, 0.017989438648499837),
        (C, 0.8457493051936533, 0.5335804651263506, 0.017522117959278584),
        (C, 0.9407768787937587, 0.3390263475411216, 0.01571097913473697),
        (C, 0.9894775374955985, 0.1446865674195309, 0.01162942390613896),
        (D, 0.7313007936597657, 0.56487681490995, 0.017792909600669947),
        (D, 0.7628406246046698, 0.6017546634089558, 0.017828685057660693),
        (D, 0.7793481057026609, 0.6214302417481605, 0.017906541331789098),
        (D, 0.8156092232039754, 0.4908826589037616, 0.01751376156594036),
        (D, 0.8380641334583124, 0.522448218969663, 0.017499263032611505),
        (D, 0.8833103605221128, 0.410218247404573, 0.016911240515271184),
        (D, 0.8972853361328333, 0.4346575516141163, 0.01681841177508118),
        (D, 0.9344148270524022, 0.3245284345717394, 0.01585276984465826),
        (D, 0.9693858634984321, 0.2355187894242326, 0.014163419279047748),
    ]),
    (974, 53, &[
        (A1, 0.0, 0.0, 0.001807413785064742),
        (A3, 0.0, 0.0, 0.014146871801989688),
        (B, 0.04292963545341347, 0.9981553450238465, 0.006217877052165789),
        (B, 0.1051426854086404, 0.9888832243546856, 0.009246323068805972),
        (B, 0.1750024867623087, 0.9688902204347074, 0.01117041368444565),
        (B, 0.2477653379650257, 0.9366027304071631, 0.012426064370758433),
        (B, 0.3206567123955957, 0.8912679426476061, 0.013236154168347763),
        (B, 0.3916520749849983, 0.8325967237023519, 0.013732263488462465),
        (B, 0.4590825874187624, 0.7605829053152514, 0.014003830134509659),
        (B, 0.5214563888415861, 0.6754009691084143, 0.014121142155198049),
        (B, 0.6253170244654199, 0.4668589056957432, 0.014140174390865205),
        (B, 0.663792674452317, 0.34461365423743795, 0.014151659382211825),
        (B, 0.6910410398498301, 0.2119541518501843, 0.014203604477068844),
        (B, 0.705290700745776, 0.07162440144995555, 0.014262661433124558),
        (C, 0.7737784472573748, 0.6334563241139567, 0.014191203422655608),
        (C, 0.8827859807011816, 0.4697753849207649, 0.013501685269873243),
        (C, 0.9557815124965484, 0.2940777114468387, 0.011880445529094634),
        (C, 0.9923235654314901, 0.123668676265799, 0.008574497021019508),
        (D, 0.7165918454670238, 0.5674997546074373, 0.014096703837495781),
        (D, 0.7476206108340857, 0.6029619156159187, 0.014109403473412342),
        (D, 0.7671021862205583, 0.6256167358580814, 0.014159750357809338),
        (D, 0.7949422999642084, 0.5030673999662036, 0.013930792413081062),
        (D, 0.8187485362810218, 0.5348666438135476, 0.013914106100299166),
        (D, 0.8310175524134743, 0.551750542142352, 0.013935605720681879),
        (D, 0.860143461601762, 0.4331561291720157, 0.013580014917832879),
        (D, 0.8770584618658027, 0.4602621942484054, 0.013512061888370468),
        (D, 0.9121183784091215, 0.3589606329589096, 0.012973544233826979),
        (D, 0.922616110730809, 0.3798395216859157, 0.012849977455838544),
        (D, 0.9510201693743899, 0.2817606422442134, 0.012021587439178331),
        (D, 0.97737272284531, 0.2029128752777523, 0.010602101746887664),
    ]),
    (1202, 59, &[
        (A1, 0.0, 0.0, 0.0013888217504239762),
        (A2, 0.0, 0.0, 0.01156763661782805),
        (A3, 0.0, 0.0, 0.011477067075661127),
        (B, 0.03712636449657089, 0.9986206817999193, 0.004637520929383973),
        (B, 0.09140060412262223, 0.9916107397220139, 0.007042182692930802),
        (B, 0.1531077852469906, 0.976276606394685, 0.008627187438744667),
        (B, 0.2180928891660612, 0.9512470674805785, 0.009701663550202072),
        (B, 0.2839874532200175, 0.9158068862086683, 0.010432030319160769),
        (B, 0.3491177600963764, 0.869616915181954, 0.010916019799855),
        (B, 0.4121431461444309, 0.8125737222999156, 0.011218094911060898),
        (B, 0.4718993627149127, 0.7447294696321065, 0.011386162518793453),
        (B, 0.5273145452842337, 0.6662422537361044, 0.011460250090599007),
        (B, 0.6209475332444019, 0.47838093807695226, 0.011471488049646438),
        (B, 0.6569722711857291, 0.3698308664594258, 0.011473994785596702),
        (B, 0.6841788309070143, 0.2525839557007183, 0.011501840416315927),
        (B, 0.7012604330123631, 0.12832618665972312, 0.011545272921893316),
        (C, 0.8216192370614335, 0.5700366911792503, 0.01134884348397456),
        (C, 0.9087801316819105, 0.4172752955306717, 0.010635212041756437),
        (C, 0.966089643296119, 0.2582068959496968, 0.009212586853640415),
        (C, 0.9942333548213224, 0.1072382215478166, 0.006505581557685621),
        (D, 0.7043837184021765, 0.5693702498468441, 0.011442635813972176),
        (D, 0.7344305757559503, 0.603116169309631, 0.011445216092627289),
        (D, 0.755358414353351, 0.6269805509024392, 0.011475079348200834),
        (D, 0.7661621213900394, 0.6394279634749102, 0.011508302534349396),
        (D, 0.777356306907035, 0.5123518486419871, 0.0113382503403834),
        (D, 0.8015469370783529, 0.54343035696939, 0.011322415128385551),
        (D, 0.8165288564022188, 0.56321230207621, 0.011336553076873987),
        (D, 0.8396753624049856, 0.4507422593157064, 0.011121592794205997),
        (D, 0.8581979986041619, 0.4785320675922435, 0.011072289696133737),
        (D, 0.8676435628462708, 0.4932221184851285, 0.011062438286513447),
        (D, 0.8912407560074747, 0.3854291150669224, 0.010752162755474637),
        (D, 0.9043674199393299, 0.4090268427085357, 0.010660541746034315),
        (D, 0.9320822040143202, 0.3173615246611977, 0.010180936061521024),
        (D, 0.9402007994128811, 0.3354616289066489, 0.01005124658581385),
        (D, 0.9624249230326228, 0.2475716463426288, 0.009343135395662094),
        (D, 0.9827986018263947, 0.1771774022615325, 0.008150269576507465),
    ]),
];
