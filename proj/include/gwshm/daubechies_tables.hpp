#pragma once

// Minimum-phase Daubechies scaling filters db1..db45, 2N taps each.
// Generated by tools/gen_daubechies_tables.py (arbitrary-precision
// spectral factorization); do not edit by hand.

#include <cstddef>

namespace gwshm::detail {

inline constexpr int kMaxDaubechiesOrder = 45;

inline constexpr double kDb1[2] = {
    0.707106781186547524401, 0.707106781186547524401
};

inline constexpr double kDb2[4] = {
    0.482962913144534143375, 0.836516303737807905575, 0.224143868042013381026,
    -0.129409522551260381174
};

inline constexpr double kDb3[6] = {
    0.332670552950082615999, 0.806891509311092576494, 0.459877502118491570095,
    -0.135011020010254588696, -0.0854412738820266616928, 0.0352262918857095366027
};

inline constexpr double kDb4[8] = {
    0.230377813308896500863, 0.714846570552915647090, 0.630880767929858907882,
    -0.0279837694168598542114, -0.187034811719093084080, 0.0308413818355607636272,
    0.0328830116668851997354, -0.0105974017850690321049
};

inline constexpr double kDb5[10] = {
    0.160102397974192914481, 0.603829269797189670540, 0.724308528437772927728,
    0.138428145901320731505, -0.242294887066382031863, -0.0322448695846383746485,
    0.0775714938400457135231, -0.00624149021279827427419, -0.0125807519990819994685,
    0.00333572528547377127800
};

inline constexpr double kDb6[12] = {
    0.111540743350109463621, 0.494623890398453085677, 0.751133908021095350679,
    0.315250351709197629086, -0.226264693965439820076, -0.129766867567261935562,
    0.0975016055873230491023, 0.0275228655303057286255, -0.0315820393174860295651,
    0.000553842201161496139252, 0.00477725751094551063964, -0.00107730108530847956485
};

inline constexpr double kDb7[14] = {
    0.0778520540850091790200, 0.396539319481917306539, 0.729132090846235119917,
    0.469782287405193122472, -0.143906003928564975405, -0.224036184993874982638,
    0.0713092192668302647509, 0.0806126091510830719129, -0.0380299369350144135796,
    -0.0165745416306668806541, 0.0125509985560998406130, 0.000429577972921366521132,
    -0.00180164070404749091527, 0.000353713799974520248446
};

inline constexpr double kDb8[16] = {
    0.0544158422431040099550, 0.312871590914299970659, 0.675630736297289806808,
    0.585354683654206712771, -0.0158291052563493056674, -0.284015542961546926516,
    0.000472484573913282770361, 0.128747426620478458857, -0.0173693010018075461696,
    -0.0440882539307947515068, 0.0139810279173982816487, 0.00874609404740577671638,
    -0.00487035299345157431042, -0.000391740373376947046298, 0.000675449406450569366370,
    -0.000117476784124769533731
};

inline constexpr double kDb9[18] = {
    0.0380779473638783465887, 0.243834674612590353732, 0.604823123690111111903,
    0.657288078051300538078, 0.133197385825007576191, -0.293273783279174908806,
    -0.0968407832229764605135, 0.148540749338106380135, 0.0307256814793333792123,
    -0.0676328290613299736756, 0.000250947114831451957587, 0.0223616621236790972054,
    -0.00472320475775139727793, -0.00428150368246342983450, 0.00184764688305622647662,
    0.000230385763523195967205, -0.000251963188942710136975, 0.0000393473203162715994807
};

inline constexpr double kDb10[20] = {
    0.0266700579005555535866, 0.188176800077691489021, 0.527201188931725586482,
    0.688459039453603565742, 0.281172343660577460749, -0.249846424327315379416,
    -0.195946274377377043504, 0.127369340335793260083, 0.0930573646035723511604,
    -0.0713941471663970871453, -0.0294575368218758128583, 0.0332126740593410017398,
    0.00360655356695616965542, -0.0107331754833305750443, 0.00139535174705290116579,
    0.00199240529518505611716, -0.000685856694959711626561, -0.000116466855129285450951,
    0.0000935886703200695913341, -0.0000132642028945212448124
};

inline constexpr double kDb11[22] = {
    0.0186942977614710840254, 0.144067021150624512795, 0.449899764356045334769,
    0.685686774916200511121, 0.411964368947907462926, -0.162275245027490362241,
    -0.274230846817946961202, 0.0660435881966831919006, 0.149812012466378496407,
    -0.0464799551166841872716, -0.0664387856950252052790, 0.0313350902190460760309,
    0.0208409043601810630229, -0.0153648209062015994262, -0.00334085887301444560609,
    0.00492841765605904112317, -0.000308592858815143165175, -0.000893023250666264613390,
    0.000249152523552823498871, 0.0000544390746993684716736, -0.0000346349841869849955413,
    0.00000449427427723651009542
};

inline constexpr double kDb12[24] = {
    0.0131122579572295175067, 0.109566272821185154606, 0.377355135214212657093,
    0.657198722579307089303, 0.515886478427815608756, -0.0447638856537746266676,
    -0.316178453752785536865, -0.0237792572560697276840, 0.182478605927579679854,
    0.00535956967435215032828, -0.0964321200965070820265, 0.0108491302558221843809,
    0.0415462774950844407393, -0.0122186490697482807200, -0.0128408251983006832947,
    0.00671149900879550917777, 0.00224860724099523759995, -0.00217950361862776047160,
    0.00000654512821250959556650, 0.000388653062820931443590, -0.0000885041092082043242082,
    -0.0000242415457570307840298, 0.0000127769522193797665871, -0.00000152907175806851090271
};

inline constexpr double kDb13[26] = {
    0.00920213353896236797297, 0.0828612438729027796443, 0.311996322160438063396,
    0.611055851158787652821, 0.588889570431218908071, 0.0869857261796472373102,
    -0.314972907711388632998, -0.124576730750815258941, 0.179476079429339843235,
    0.0729489336567771638090, -0.105807618187934326451, -0.0264884064753436946396,
    0.0561394771002834288621, 0.00237997225405907881147, -0.0238314207103236490321,
    0.00392394144879741624332, 0.00725558940161756619452, -0.00276191123465686217801,
    -0.00131567391189229893661, 0.000932326130867263386223, 0.0000492515251262894619214,
    -0.000165128988556505489462, 0.0000306785375793254934665, 0.0000104419305714081370817,
    -0.00000470041647936086832565, 5.22003509845486469174e-7
};

inline constexpr double kDb14[28] = {
    0.00646115346008794781817, 0.0623647588493988983280, 0.254850267792621353666,
    0.554305617940893835993, 0.631187849104856779558, 0.218670687758906521492,
    -0.271688552278748041414, -0.218033529993276044756, 0.138395213864806591074,
    0.139989016584460701249, -0.0867484115681696890456, -0.0715489555040461307358,
    0.0552371262592160441162, 0.0269814083079129169740, -0.0301853515403906351871,
    -0.00561504953035695913322, 0.0127894932663334089616, -0.000746218989268384937182,
    -0.00384963886802218744579, 0.00106169108560676184303, 0.000708021154235527858644,
    -0.000386831947312954482108, -0.0000417772457703725973527, 0.0000687550425269750960387,
    -0.0000103372091845707739466, -0.00000438970490178139411525, 0.00000172499467536781276989,
    -1.78713996831135907633e-7
};

inline constexpr double kDb15[30] = {
    0.00453853736157889888146, 0.0467433948927662718917, 0.206023863986995731540,
    0.492631771708139623607, 0.645813140357424358176, 0.339002535454731527691,
    -0.193204139609145428706, -0.288882596566965646248, 0.0652829528487728169228,
    0.190146714007122982348, -0.0396661765557909444838, -0.111120936037231693366,
    0.0338771439235076862085, 0.0547805505845076126891, -0.0257670073284399625859,
    -0.0208100501696930816779, 0.0150839180278359023633, 0.00510100036040754316971,
    -0.00648773456031574499518, -0.000241756490761624281167, 0.00194332398038221154176,
    -0.000373482354137616992010, -0.000359565244362468812165, 0.000155896489920599747947,
    0.0000257926991553189368093, -0.0000281332962660478136476, 0.00000336298718173757980312,
    0.00000181127040794057708377, -6.31688232588166442120e-7, 6.13335991330575202906e-8
};

inline constexpr double kDb16[32] = {
    0.00318922092534773802977, 0.0349077143236733464103, 0.165064283488853117899,
    0.430312722846003813740, 0.637356332083788898632, 0.440290256886356900039,
    -0.0897510894024896428572, -0.327063310527917704646, -0.0279182081330282766826,
    0.211190693947104288721, 0.0273402637527160413649, -0.132388305563810390450,
    -0.00623972275247487176567, 0.0759242360442763158215, -0.00758897436885773763849,
    -0.0368883976917301423335, 0.0102976596409559694117, 0.0139937688598287310295,
    -0.00699001456341391667028, -0.00364427962149838993217, 0.00312802338120626883166,
    0.000407896980849712836242, -0.000941021749359567588927, 0.000114241520038722392644,
    0.000174787245225338180380, -0.0000610359662141093583516, -0.0000139456689882088934520,
    0.0000113366086612762585876, -0.00000104357134231160650153, -7.36365678545120551210e-7,
    2.30878408685754586641e-7, -2.10933963010074309700e-8
};

inline constexpr double kDb17[34] = {
    0.00224180700103731285354, 0.0259853937036060433891, 0.131214903307824406578,
    0.370350724152641150449, 0.610996615684622818189, 0.518315764056937839325,
    0.0273149704032936350043, -0.328320748363961736091, -0.126599752215882702874,
    0.197310589565010992785, 0.101135489177470272151, -0.126815691778286311095,
    -0.0570914196316769272891, 0.0811059866541608850797, 0.0223123361781037959534,
    -0.0469224383892697373330, -0.00327095553581929378166, 0.0227336765839462703185,
    -0.00304298998135463706859, -0.00860292152032285483171, 0.00296799669152609487281,
    0.00230120524215354562430, -0.00143684530480297612622, -0.000328132519409837971395,
    0.000439465427768643677839, -0.0000256101095665484588273, -0.0000820480320245339183910,
    0.0000231868137987459508448, 0.00000699060098507675127320, -0.00000450594247722298819410,
    3.01654960999455741561e-7, 2.95770093331685675498e-7, -8.42394844600268017879e-8,
    7.26749296856160811088e-9
};

inline constexpr double kDb18[36] = {
    0.00157631021844076043154, 0.0192885317241463770592, 0.103588465822423596224,
    0.314678941337031699057, 0.571826807766607223482, 0.571801654888651335289,
    0.147223111969928141575, -0.293654040736558744248, -0.216480934005142971124,
    0.149533975565377789351, 0.167081312763257404515, -0.0923318841508462806043,
    -0.106752246659828485593, 0.0648872162119054428195, 0.0570512477385368841209,
    -0.0445261419029823247156, -0.0237332103958600010328, 0.0266707059264705902999,
    0.00626216795430570748524, -0.0130514809466120017728, 0.000118630033858117465730,
    0.00494334360546673813067, -0.00111873266699249707280, -0.00134059629833610662952,
    0.000628465682965145712562, 0.000213581561910340688404, -0.000198648552311747948580,
    -1.53591712353472467507e-7, 0.0000374123788074003818109, -0.00000852060253744669520392,
    -0.00000333263447888582188878, 0.00000176871298362761545588, -7.69163268988517614600e-8,
    -1.17609876702823169845e-7, 3.06883586304517480094e-8, -2.50793445494859826720e-9
};

inline constexpr double kDb19[38] = {
    0.00110866976318171057110, 0.0142810984507643973744, 0.0812781132654595506530,
    0.264388431740896784675, 0.524436377464654915336, 0.601704549127537894887,
    0.260894952651038829287, -0.228091394215482646375, -0.285838631755826241855,
    0.0746522697081032663676, 0.212349743306278488809, -0.0335185419023028786817,
    -0.142785695038736574978, 0.0275843506256286687501, 0.0869067555558122324885,
    -0.0265012362501230408990, -0.0456742262772309080565, 0.0216237674095850471303,
    0.0193755498891761276464, -0.0139883886785351416325, -0.00586692228101217472658,
    0.00704074736710524315301, 0.000768954359257548355975, -0.00268755180070158200396,
    0.000341808653458595776565, 0.000735802520505435207026, -0.000260676135678628005732,
    -0.000124600791734158775345, 0.0000871127046721992296542, 0.00000510595048707388605305,
    -0.0000166401762971549445462, 0.00000301096431629652633970, 0.00000153193147669119306393,
    -6.86275565776914270188e-7, 1.44708829879784454208e-8, 4.63693777578260422343e-8,
    -1.11640206703582581639e-8, 8.66684883899761935032e-10
};

inline constexpr double kDb20[40] = {
    0.000779953613666846321586, 0.0105493946249503983245, 0.0634237804590815149759,
    0.219942113551397045008, 0.472696185310901696371, 0.610493238938593820163,
    0.361502298739331062920, -0.139212088011483872581, -0.326786800434034967403,
    -0.0167270883090770075752, 0.228291050819916322973, 0.0398502464577712021979,
    -0.155458750707267955932, -0.0247168273386135840159, 0.102291719174442557886,
    0.00563224685730743550695, -0.0617228996246804597332, 0.00587468181181182649130,
    0.0322942995307695817589, -0.00878932492390156134875, -0.0138105261371519200782,
    0.00672162730225945683534, 0.00442054238704579096306, -0.00358149425960962277756,
    -0.000831562172822556919248, 0.00139255961932313632391, -0.0000534975984399769505176,
    -0.000385104748699217606065, 0.000101532889736702905080, 0.0000677428082837772955801,
    -0.0000371058618339471286423, -0.00000437614386218399681037, 0.00000724124828767362010284,
    -0.00000101199401001888615034, -6.84707959700055689416e-7, 2.63392422627000108413e-7,
    2.01432202355051269432e-10, -1.81484324829969597321e-8, 4.05612705555183276610e-9,
    -2.99883648961931956641e-10
};

inline constexpr double kDb21[42] = {
    0.000548822509852683708678, 0.00777663905235478375434, 0.0492477715381772749140,
    0.181359625440381515626, 0.419687944939362773095, 0.601506094935003897563,
    0.444590451927600340364, -0.0357229196172552904592, -0.335664089530529509483,
    -0.112397071568450981352, 0.211564527680872392385, 0.115233298439687104199,
    -0.139940424932547224925, -0.0817759429808638288739, 0.0966003903237242207023,
    0.0457234057492287923925, -0.0649775048937323206333, -0.0186538592021185153409,
    0.0397268354278504417520, 0.00335775639033811084253, -0.0208920536779790794879,
    0.00240347092080543476238, 0.00898882438197191187535, -0.00289133434858890124738,
    -0.00295837403893283128075, 0.00171660704063062413849, 0.000639418500512030214643,
    -0.000690671117082101650727, -0.0000319640627768043719371, 0.000193664650416508061532,
    -0.0000363552025008633830944, -0.0000349966598498744795397, 0.0000153548250927604928312,
    0.00000279033053981448704611, -0.00000309001716454569919716, 3.16609544236703055660e-7,
    2.99213663046485279440e-7, -1.00040087903059733205e-7, -2.25401497467333013156e-9,
    7.05803354123112185902e-9, -1.47195419765036526519e-9, 1.03880557102370655304e-10
};

inline constexpr double kDb22[44] = {
    0.000386263231491098215852, 0.00572185463133453912081, 0.0380699372364110849477,
    0.148367540890111428501, 0.367728683446037478861, 0.578432731009524427142,
    0.507901090622163901839, 0.0737245011836301516557, -0.312726580428296191803,
    -0.200568406104887093932, 0.164093188106766481861, 0.179973187992891303725,
    -0.0971107984091147096927, -0.131768137686683410751, 0.0680763143927322155674,
    0.0845573763668260750336, -0.0513642542974441324573, -0.0465308118275067134788,
    0.0369708466206980205762, 0.0205867076275653604406, -0.0234800013444931886856,
    -0.00621378284936465849907, 0.0125647252183433740689, 0.000300137398507643595123,
    -0.00545569198615671707660, 0.00104426073918602532335, 0.00182701049565727908011,
    -0.000770690988123119623288, -0.000423787399839180079953, 0.000328609414213678734198,
    0.0000434589990453200337905, -0.0000940522363481576042185, 0.0000113743496621259317274,
    0.0000173737569575618935616, -0.00000616672931646757837215, -0.00000156517913199516015931,
    0.00000129518205731887757389, -8.77987987336128627689e-8, -1.28333622875175441782e-7,
    3.76122874933736236616e-8, 1.68017140492298888555e-9, -2.72962314663297608345e-9,
    5.33593882166748990517e-10, -3.60211348433955470379e-11
};

inline constexpr double kDb23[46] = {
    0.000271904194128288841419, 0.00420274889318383353839, 0.0293100036578841151474,
    0.120515531783971933631, 0.318450813852865236342, 0.544931147873520428267,
    0.551018517241919391345, 0.181392625363840013626, -0.261392148030644111886,
    -0.271402098607843055660, 0.0921254070824180526065, 0.223573658242040231715,
    -0.0330374470942893787501, -0.164011321531875925016, 0.0202830745756492997490,
    0.112297043618107288695, -0.0211262123562272410070, -0.0702073915749011094620,
    0.0217658568344999756078, 0.0384953325225691990106, -0.0185235136501561597979,
    -0.0175371010030358453792, 0.0127519439315282864624, 0.00603184065002416281629,
    -0.00707531927370615281419, -0.00113486547335625169129, 0.00312287644981814499742,
    -0.000246501400516351203194, -0.00106123122888665132114, 0.000319420492709901150368,
    0.000256762452007873720556, -0.000150021850349034096767, -0.0000337889483412090343427,
    0.0000442607120310924607762, -0.00000263520788924918623721, -0.00000834787556785462554437,
    0.00000239756954684024005740, 8.14757483477944777809e-7, -5.33900540520942115458e-7,
    1.85309178563396501935e-8, 5.41754917953927873650e-8, -1.39993549543799884513e-8,
    -9.47288590181205053522e-10, 1.05044645369654340407e-9, -1.93240511131341754219e-10,
    1.25020330235104094143e-11
};

inline constexpr double kDb24[48] = {
    0.000191435800947551369503, 0.00308208171490549443621, 0.0224823399497164107236,
    0.0972622358336251966381, 0.272908916067726326871, 0.504371040839924991977,
    0.574939221095541996846, 0.280985553233711883344, -0.187271406885156237698,
    -0.317943078999362737545, 0.00477661368434472818795, 0.239237388780310855197,
    0.0425287296414838325815, -0.171175351370346889690, -0.0387771735779200162018,
    0.121016303469224236231, 0.0209801137091448153498, -0.0821616542080016670229,
    -0.00457843624181922163800, 0.0513016200399808791556, -0.00494470942812562829982,
    -0.0282131070949018909811, 0.00766172188164658589733, 0.0130499708710857358305,
    -0.00629143537001818778072, -0.00474656878632311380048, 0.00373604617828252334518,
    0.00115376493683948150486, -0.00169645681897482439427, -0.0000441618485614152006337,
    0.000586127059318310993372, -0.000118123323796955474061, -0.000146007981776261683892,
    0.0000655938863930563408530, 0.0000218324146046655836337, -0.0000202288829261269768286,
    1.34115775080911471932e-8, 0.00000390110033859770261041, -8.98025314393840772415e-7,
    -4.03250775687997162410e-7, 2.16633965327857463918e-7, -5.05764541979250030849e-10,
    -2.25574038817608610737e-8, 5.15777678967199963895e-9, 4.74837582425623111809e-10,
    -4.02465864458437977425e-10, 6.99180115763823097413e-11, -4.34278250380371024726e-12
};

inline constexpr double kDb25[50] = {
    0.000134802979347018899458, 0.00225695959185477952012, 0.0171867412540401553382,
    0.0780358628721326755975, 0.231693507886021819990, 0.459683415146094593790,
    0.581636896746057783353, 0.367885074802946698437, -0.0971746409646381427613,
    -0.336473079641746130956, -0.0875876145876546614023, 0.224537819745101712953,
    0.118155286719959860456, -0.150560213750579630952, -0.0985086152899602215373,
    0.106633805018477952883, 0.0667521644940186066690, -0.0770841110565741935621,
    -0.0371739628611225088760, 0.0536179093987794996063, 0.0155426059291022916398,
    -0.0340423204606533409932, -0.00307983679484703666164, 0.0189228044766276284109,
    -0.00198942578220273649429, -0.00886070261804636839901, 0.00272693625873849573987,
    0.00332270777397319178012, -0.00184248429020333128084, -0.000899977423746295049109,
    0.000877258193674827484349, 0.000115321244046630045646, -0.000309880099098469798953,
    0.0000354371452327605900528, 0.0000790464000396552825514, -0.0000273304811996004174635,
    -0.0000127719529319978380414, 0.00000899066139306258890537, 5.23282770815307641796e-7,
    -0.00000177920133265363456257, 3.21203751886251909490e-7, 1.92280679014237160128e-7,
    -8.65694173227850716339e-8, -2.61159855611177086426e-9, 9.27922448008137237225e-9,
    -1.88041575506215553720e-9, -2.22847491022816889931e-10, 1.53590157016265719702e-10,
    -2.52762516346564481105e-11, 1.50969208282391086790e-12
};

inline constexpr double kDb26[52] = {
    0.0000949379575071059211780, 0.00165052023353298824702, 0.0130975542925585008206,
    0.0622747440251496048419, 0.195039438716770099425, 0.413292962278356368612,
    0.573669043034222260320, 0.439158311789166232193, 0.00177407678098668572782,
    -0.326384593691780021639, -0.174839961289392504266, 0.181291832311122696071,
    0.182755409589672374654, -0.104323900285927043915, -0.147977193275254493578,
    0.0698231861132923651376, 0.106482405249808630324, -0.0534485616814831914949,
    -0.0686547596040359152545, 0.0422321857963720354121, 0.0385357159711118642583,
    -0.0313781103630677548424, -0.0177609035683581835409, 0.0207349201799638247589,
    0.00582958055531888797194, -0.0117854979061930289373, -0.000528738399262681443920,
    0.00560194723942380485321, -0.000939058250473828964617, -0.00214553028156762098031,
    0.000838348805654361604638, 0.000616138220457434419370, -0.000431955707426180746671,
    -0.000106057474828380388997, 0.000157479523860749359055, -0.00000527779549303786897629,
    -0.0000410967399639147781633, 0.0000107422154087219503127, 0.00000700007868296498673486,
    -0.00000388740016185679518759, -4.65046322064026263923e-7, 7.93921063370995208837e-7,
    -1.07900423757867141192e-7, -8.90446637016859076905e-8, 3.40779562129073000867e-8,
    2.16932825985032310699e-9, -3.77601047853232432818e-9, 6.78004724582863666831e-10,
    1.00230319104652691351e-10, -5.84040818534117146847e-11, 9.13051001637179624392e-12,
    -5.25187122424443503781e-13
};

inline constexpr double kDb27[54] = {
    0.0000668713138543193173492, 0.00120553123167321323425, 0.00995258878087661977187,
    0.0494525999829048800430, 0.162922027502393320640, 0.367110214125389822642,
    0.553849860990480048761, 0.493406122677998997927, 0.102840855061822911271,
    -0.289716803314594846318, -0.248264581903260566781, 0.114823019517785357633,
    0.227273288414170826528, -0.0387864186318023106244, -0.178031740959008582107,
    0.0157993974602404843117, 0.131197971717155328971, -0.0140627515558087653703,
    -0.0910229065295659179824, 0.0173110182654937108909, 0.0579694057347179881475,
    -0.0185124935619980771055, -0.0327390666310208714548, 0.0161469669223956668227,
    0.0156655956489245787300, -0.0115771864589762814005, -0.00586209634546292597297,
    0.00685663560968488067527, 0.00134262687730367960908, -0.00333285446952000616276,
    0.000145752962593172858713, 0.00130117745024413513914, -0.000341835122691542761195,
    -0.000387901857410132760437, 0.000201971987969032685710, 0.0000766005838706857687667,
    -0.0000771114551779758420841, -0.00000351748361490744539175, 0.0000206344264773688531849,
    -0.00000390116407063842552817, -0.00000365750090818710499705, 0.00000163436962472563783542,
    3.05088068625199909424e-7, -3.47246814739438926936e-7, 3.28655896805515953098e-8,
    4.02625505286690863718e-8, -1.32133227399005655885e-8, -1.30946560685695515128e-9,
    1.52161498477852174078e-9, -2.41552692801113066051e-10, -4.37498622429365439507e-11,
    2.21366208806766248518e-11, -3.29579012247658580707e-12, 1.82818835288242493362e-13
};

inline constexpr double kDb28[56] = {
    0.0000471080777501405110107, 0.000879498515984387027356, 0.00754265037764685917716,
    0.0390926081154053442609, 0.135137914253641045077, 0.322563361285522425732,
    0.524998231630335556235, 0.530516293441485807526, 0.200176144045984438038,
    -0.230498954047582525728, -0.301327809532641781691, 0.0328578791633871046845,
    0.245808151373759553575, 0.0369068853157112720529, -0.182877330732984916692,
    -0.0468382337445516761651, 0.134627567910226087749, 0.0344786312750997052468,
    -0.0976853558056524417496, -0.0173419228313058990880, 0.0677478955019093395617,
    0.00344801895554095113760, -0.0433333686160862839386, 0.00443173291006298832049,
    0.0246880600101518658626, -0.00681554976455230963926, -0.0120635919682184900584,
    0.00583881662774894486450, 0.00478486311245424171801, -0.00372546124707425479917,
    -0.00136037384563969243658, 0.00187599866820279562615, 0.000141567239314046425757,
    -0.000748674955911462999132, 0.000115465606365892125197, 0.000229579098223345620237,
    -0.0000890390149004448809952, -0.0000490771341619025085832, 0.0000364140121105080278122,
    0.00000463866498139429465400, -0.0000100432604133342260178, 0.00000124790031757483414605,
    0.00000184036373451776919168, -6.67021547995489258875e-7, -1.75746117320984277990e-7,
    1.49066001353536217099e-7, -8.26238731562655696597e-9, -1.78413869087571007719e-8,
    5.04404705638343644463e-9, 6.94454032894622695298e-10, -6.07704124722901022476e-10,
    8.49222001105638210546e-11, 1.86736726378339041896e-11, -8.36549047125880079935e-12,
    1.18885053340590152084e-12, -6.36777235471485733563e-14
};

inline constexpr double kDb29[58] = {
    0.0000331896627984152476181, 0.000640951680304443454083, 0.00570212651777337543476,
    0.0307735802214083767672, 0.111370116951740530476, 0.280653455970982937697,
    0.489758804762199314359, 0.551374432758375195122, 0.289105238335829163461,
    -0.154028734459900054247, -0.330040948917588052030, -0.0557068000729408578151,
    0.236105236153025941598, 0.112419174873188376477, -0.160877988594187736077,
    -0.107845949938721420108, 0.114472295893818257973, 0.0832207471624497579030,
    -0.0851254926156355023283, -0.0550274895253257232092, 0.0634791645842118663358,
    0.0305315432727041364664, -0.0451879812777883451598, -0.0129171425542667946297,
    0.0294704318717476411103, 0.00264832730767816791554, -0.0170412245736066896923,
    0.00173788033272051116443, 0.00846972549356075228777, -0.00255080712778947265915,
    -0.00347379898968110063065, 0.00187712092572365013318, 0.00108705394222606296674,
    -0.00100077832708568054106, -0.000200071136307677980830, 0.000411128345474276703342,
    -0.0000229201804121449989738, -0.000129304484008072060916, 0.0000364502606856277496767,
    0.0000291334475016904121850, -0.0000165732839530661628986, -0.00000359364480402518763807,
    0.00000475060924645255285020, -3.02905459205281828647e-7, -8.97570175063628073451e-7,
    2.63389838699769655390e-7, 9.38719741109586302648e-8, -6.28615692201078616677e-8,
    1.07659190661919613739e-9, 7.76897885477006223890e-9, -1.89399538617198414777e-9,
    -3.42680086326308900181e-10, 2.40709945350934296240e-10, -2.94058925076453258289e-11,
    -7.83250973362781703236e-12, 3.15276241337031042380e-12, -4.28565487006834410190e-13,
    2.21919131158830296093e-14
};

inline constexpr double kDb30[60] = {
    0.0000233861617273142147147, 0.000466637950428550933666, 0.00430079716504806951005,
    0.0241308326715883789519, 0.0912383040670157067932, 0.242020670940214099447,
    0.450487821853317836698, 0.557572232912836430408, 0.366242683371627979314,
    -0.0661836707759373150191, -0.332966975020855606920, -0.141968513330082931022,
    0.199462121580664303243, 0.177829873244836736128, -0.114558219432707781489,
    -0.157236817959993812688, 0.0727786589703644269989, 0.122747746045009377869,
    -0.0538064654582570767602, -0.0876586900363836604803, 0.0438016646714177325031,
    0.0567123657447356949259, -0.0356733974967596096578, -0.0322637589193522081595,
    0.0270786195952941827221, 0.0152879607698573954605, -0.0183997438681173411873,
    -0.00529685966613108662917, 0.0109156316583048892754, 0.000619671756497724438359,
    -0.00553073014819200328887, 0.000843384586662093398213, 0.00232452009406009930439,
    -0.000860927696811042387966, -0.000767878250438091869796, 0.000505094823903346779626,
    0.000172482584235170972555, -0.000216171830116963380427, -0.00000854830546758407099479,
    0.0000698200837080832785108, -0.0000133971686329397162930, -0.0000163615247872542648865,
    0.00000725214553589046901572, 0.00000232754909849368650956, -0.00000218726767699616641670,
    1.09947433852620330429e-8, 4.26166232601157244647e-7, -1.00041468235450089886e-7,
    -4.76437996513945335773e-8, 2.60544275497762543194e-8, 5.55339786139705398297e-10,
    -3.33110568046757824590e-9, 6.98486269183218258422e-10, 1.61362297827090436061e-10,
    -9.46138799727680212088e-11, 1.00010513139317119275e-11, 3.23942863853228611436e-12,
    -1.18523759210158232825e-12, 1.54399757084762004600e-13, -7.73794263095440570868e-15
};

inline constexpr double kDb31[62] = {
    0.0000164801338645614074812, 0.000339412203776995669916, 0.00323688406862772122183,
    0.0188536916129859126916, 0.0743360930116478869791, 0.207012874485235328620,
    0.409192200037427856393, 0.551139840914275498359, 0.429468808206137295543,
    0.0271692124973694642231, -0.310955118319507518693, -0.217978485523563352169,
    0.140178288765273268166, 0.224966711473737093370, -0.0499263491604682397700,
    -0.186962360895715449437, 0.0154369884294889340965, 0.145089500931993198152,
    -0.00813983227346923686353, -0.107612773323495632667, 0.0109412974523649692573,
    0.0753536117432814069553, -0.0148800266181048220270, -0.0486190754648543300354,
    0.0161541715659859111362, 0.0280476193667561690686, -0.0142762752777635194331,
    -0.0139005529392665288076, 0.0105176394873718408913, 0.00551616357331099256656,
    -0.00652085237587461255333, -0.00142826422321890989140, 0.00339306677671593192842,
    -0.0000639790110601460049288, -0.00145904174198516094311, 0.000343139829690473443812,
    0.000499881617563722261490, -0.000239658346940294961529, -0.000124341161725022866941,
    0.000108958435041676688274, 0.0000150133572744453299707, -0.0000363125515786008616426,
    0.00000403452023518427883975, 0.00000879530134269298776544, -0.00000303514236589150963007,
    -0.00000136906023094294078205, 9.81001542204437157395e-7, 5.32725065697491542698e-8,
    -1.97592512917020624815e-7, 3.61682651733100480525e-8, 2.32830971382140964431e-8,
    -1.06152960215025230650e-8, -6.47431168795986139870e-10, 1.40856815102517742708e-9,
    -2.52404395415335330618e-10, -7.34893003248626390477e-11, 3.69210880887112941160e-11,
    -3.32700896712597992991e-12, -1.32433491724396316388e-12, 4.44546709629193216330e-13,
    -5.55944205057901433764e-14, 2.69938287976266564730e-15
};

inline constexpr double kDb32[64] = {
    0.0000116146330213501488557, 0.000246656690638090335274, 0.00243126191957226610078,
    0.0146810463814191356355, 0.0602574991203353708175, 0.175750783639438898819,
    0.367509628597349636200, 0.534317919340953832290, 0.477809163733948403356,
    0.120630538265617826954, -0.266698181476675553549, -0.277421581558427215334,
    0.0647133548055162383100, 0.248310642356880173606, 0.0246624448396974044170,
    -0.192102344708546898434, -0.0489951171846717385336, 0.145232079475286646084,
    0.0444049081999397402264, -0.109456113116089383103, -0.0296278725084477049120,
    0.0808741406384839574409, 0.0141061515161066077287, -0.0569263140624784355048,
    -0.00238026446493257383444, 0.0370514579235446801044, -0.00414590766082721878146,
    -0.0216628228363911934763, 0.00616752731068567511258, 0.0110174007154068811653,
    -0.00541156825727579120858, -0.00464921675118441152866, 0.00362722464068786496012,
    0.00146895510046846777253, -0.00196474055582177825418, -0.000221167872957909791628,
    0.000867305851845055534393, -0.000102453731060739618695, -0.000305965442382691175048,
    0.000105391546173982811470, 0.0000810367832913483838983, -0.0000525980928268432278265,
    -0.0000129404577940551272395, 0.0000182426840198069122060, -6.36178153226025495336e-7,
    -0.00000455830957626442313512, 0.00000120288903632162099030, 7.56004762559594781939e-7,
    -4.28597069315145725542e-7, -5.00336186874823029369e-8, 8.96596631195772837698e-8,
    -1.21992435948337309311e-8, -1.10438302172264897955e-8, 4.25042231198059298374e-9,
    4.38438779994047436955e-10, -5.88109146263460562888e-10, 8.90472379622160549046e-11,
    3.26327074133290787598e-11, -1.43091876516920232019e-11, 1.07561065350106211517e-12,
    5.36148222961180163811e-13, -1.66380048943340236989e-13, 2.00071530381052495438e-14,
    -9.42101913953507842131e-16
};

inline constexpr double kDb33[66] = {
    0.00000818635831417509193986, 0.000179101615370279147942, 0.00182270943516408420808,
    0.0113959433745816092583, 0.0486146665317161950839, 0.148186313180052808178,
    0.326718130117707578393, 0.509376172514939655223, 0.511254770583267465543,
    0.209582350713055421653, -0.204202622398542104963, -0.315997410766560256191,
    -0.0192783394369527591560, 0.245420612119279111418, 0.0998515586803381569814,
    -0.171428099051859327931, -0.110844133116710791081, 0.121967856403734614939,
    0.0947880880506159588926, -0.0911469683513314891309, -0.0703024850540561592145,
    0.0701911439409965325500, 0.0457345618938966774314, -0.0534712513358222891943,
    -0.0252485829774764992926, 0.0386870607602449648175, 0.0107032658200195494265,
    -0.0257287617547329733612, -0.00216775861735360732478, 0.0153169541158576654835,
    -0.00159428878241460476864, -0.00795354038705793924046, 0.00238906240816590857594,
    0.00348080095340571199941, -0.00186071821445579591207, -0.00120430925760465887692,
    0.00107438069635129135507, 0.000272730584733693721175, -0.000490832900759035147449,
    0.00000439316625176618575506, 0.000178043189825124535183, -0.0000416043851627370930623,
    -0.0000492956442341730183431, 0.0000242333539881689036562, 0.00000907080575782845380020,
    -0.00000886612136675773616918, -3.60751610287977163123e-7, 0.00000228837127614152730548,
    -4.42692340795287014798e-7, -3.98579129198594407694e-7, 1.82244333257105343747e-7,
    3.37797270373085437752e-8, -3.98783819851888072282e-8, 3.67286357683818134051e-9,
    5.11121185734745383955e-9, -1.67139267725193249517e-9, -2.49640210524619364807e-10,
    2.42683310230568230989e-10, -3.04957445394586343036e-11, -1.42023685988993679244e-11,
    5.50941472076552454875e-12, -3.34348121895327876598e-13, -2.15248838683330261852e-13,
    6.21474024717439831558e-14, -7.19651054536332241403e-15, 3.28937367841630636863e-16
};

inline constexpr double kDb34[68] = {
    0.00000577051063273028562747, 0.000129947620067953003783, 0.00136406139005904999820,
    0.00881988940388497880318, 0.0390488413517859413891, 0.124152482111376808195,
    0.287765059233714562933, 0.478478746279371062147, 0.530555099656463177313,
    0.290366329507274951046, -0.128246842174437167291, -0.331525301508386941772,
    -0.103891915515640471829, 0.216907220187427595061, 0.166601750412207443731,
    -0.127337358223801156284, -0.160924927177866806301, 0.0779918469379481073827,
    0.134125960271136128480, -0.0544829680641390463663, -0.102947596992814085234,
    0.0435760946496312972643, 0.0731852354367956055555, -0.0370128384178624496036,
    -0.0474385596452777624722, 0.0307397465739593445993, 0.0272283507563541961010,
    -0.0236717379228263648505, -0.0131439800166571608611, 0.0164093741998651925211,
    0.00471364926099980990592, -0.0100455067083615191744, -0.000619474884515387283901,
    0.00533495076875993603217, -0.000769212797506783697599, -0.00239945394353705586393,
    0.000858995987436366195544, 0.000875199906407868873261, -0.000552735576214419797552,
    -0.000232673214023353163543, 0.000265077239755805781976, 0.0000266005001845344190305,
    -0.0000991469777078013460358, 0.0000135311722724964958125, 0.0000284495141969780737650,
    -0.0000105765749425795062385, -0.00000571082651099830393828, 0.00000416987175854702839832,
    4.97971810142130774808e-7, -0.00000111630653481700842860, 1.44819570833318512706e-7,
    2.02599066666785921669e-7, -7.52670174041258941118e-8, -1.99034650153173691587e-8,
    1.74042333293606807650e-8, -8.66574426136872221586e-10, -2.31650194699548275158e-9,
    6.44637821032340231310e-10, 1.30041031860941524888e-10, -9.90477453763240901548e-11,
    1.00420873546176986484e-11, 6.08012535400016725406e-12, -2.10787910891530154629e-12,
    9.79945115821159772790e-14, 8.57919405179973317979e-14, -2.31708370390640848108e-14,
    2.58733838193569955581e-15, -1.14894475448059012824e-16
};

inline constexpr double kDb35[70] = {
    0.00000406793406114855902667, 0.0000942146947557674063160, 0.00101912268037509810932,
    0.00680729288431913201197, 0.0312362885114907145306, 0.103404455861478378994,
    0.251307378994493312851, 0.443592739224035437818, 0.537008427509166102867,
    0.360345640518047327874, -0.0438838818739340411134, -0.323822864912116121215,
    -0.181786976766727832579, 0.166041357490780919544, 0.217299289321089297768,
    -0.0652628713106775389215, -0.191919589298593952876, 0.0193095446660183509195,
    0.155292480396237114421, -0.00475268083411135044529, -0.120585522643393554508,
    0.00473422917264194876329, 0.0899135475707295441787, -0.00931855894990392483788,
    -0.0633560374404434661210, 0.0132285495850365552446, 0.0412546930647050921275,
    -0.0143668397842200718210, -0.0241694978016602674029, 0.0127664567156567441940,
    0.0122894360081187108616, -0.00957779789923570999815, -0.00508599164923342988180,
    0.00613775458674052108960, 0.00142808879407076210736, -0.00335764438092238322957,
    0.00000761596943517273654677, 0.00154963746970236297556, -0.000334669216425085496161,
    -0.000586481031899181753218, 0.000264832881996128903930, 0.000170001228366124904358,
    -0.000136588307226116160256, -0.0000297699596284850974394, 0.0000530414312291331022254,
    -0.00000243700152682778986099, -0.0000157244207727028169366, 0.00000430804786171673119135,
    0.00000335334586287130988939, -0.00000189592961769315328849, -3.90393173328730616666e-7,
    5.30236861690476091707e-7, -3.70030837820512453799e-8, -9.99039694453490075578e-8,
    3.00818865071906692823e-8, 1.08490273378993482527e-8, -7.45811655289303763119e-9,
    5.89795131038436157547e-11, 1.03082334548543338381e-9, -2.43354557375167293617e-10,
    -6.40793825650188901843e-11, 4.00053662725374451074e-11, -3.12563935710855754060e-12,
    -2.56706547615508144920e-12, 8.01508853368790092195e-13, -2.59795432889384808432e-14,
    -3.39772085679626743196e-14, 8.62403743472008920268e-15, -9.29801252932418542092e-16,
    4.01462871233348865432e-17
};

inline constexpr double kDb36[72] = {
    0.00000286792518275594633463, 0.0000682602867854635869175, 0.000760215109966848828587,
    0.00524029737740988436620, 0.0248905656448279648489, 0.0856520925952640908386,
    0.217756953097900814964, 0.406433697708255346741, 0.532266895260728691478,
    0.417875335600969786362, 0.0439751975293486299386, -0.294421039589114571110,
    -0.246807036978125527052, 0.0981142041631147705052, 0.246537277608974211053,
    0.00727851509579222900969, -0.199337205608649619860, -0.0458614007463927163915,
    0.154106236627642884178, 0.0502761800735384286204, -0.118803754310135631680,
    -0.0398808535755131758409, 0.0911567822580165440634, 0.0250387214495684898992,
    -0.0682090166368175112488, -0.0113191003168174279438, 0.0485130835478090853862,
    0.00142497266176539160315, -0.0319807206776396965447, 0.00398404019871700485740,
    0.0190635947806253593288, -0.00565781324505881838042, -0.00999026347328137234800,
    0.00502298910666582900470, 0.00441348483535057525192, -0.00348454144540488331121,
    -0.00150307406629664374955, 0.00199079377185173727040, 0.000277681279571202606815,
    -0.000946340382326110196460, 0.0000861456575899270203261, 0.000369350728496751050262,
    -0.000115511889584352709685, -0.000113189946808466567173, 0.0000669474119693059025710,
    0.0000237510668366086077716, -0.0000273139082465433791292, -0.00000118347105998561594278,
    0.00000837221819816078843263, -0.00000158614578243457749550, -0.00000187081160285918071376,
    8.31142127970777852816e-7, 2.54842352255657783122e-7, -2.45537765843423269914e-7,
    2.75324907333951225409e-9, 4.79904346545099200993e-8, -1.15609368881700840676e-8,
    -5.61278434332779139747e-9, 3.13884169578242401835e-9, 1.09081555371375181096e-10,
    -4.51254577856324963443e-10, 8.96241820385961198707e-11, 3.03742909811253522180e-11,
    -1.59971668926135714320e-11, 8.87684628721737421352e-13, 1.07096935711401700242e-12,
    -3.02928502697487726890e-13, 5.54226318263980423523e-15, 1.33807138629910589603e-14,
    -3.20462854340174986044e-15, 3.33997198481869321313e-16, -1.40327417537319061749e-17
};

inline constexpr double kDb37[74] = {
    0.00000202206086249839212182, 0.0000494234375062813200471, 0.000566241837706672401377,
    0.00402414036825728677070, 0.0197622861538795915324, 0.0705848259771816083203,
    0.187326331862064944803, 0.368440972400306140945, 0.518167040855622887310,
    0.462207553661605714551, 0.130878963233020172606, -0.246180429761083413287,
    -0.294375915262661772281, 0.0196715004523593897708, 0.251523254360268693344,
    0.0818060283872186233903, -0.181962291778608000741, -0.108451713823301784555,
    0.129929646959853752784, 0.101780296838814179747, -0.0966075406166843903092,
    -0.0823302119065574086740, 0.0750476199483601793358, 0.0595674108715299524544,
    -0.0592568156326589709515, -0.0382538294793842488201, 0.0458079441512683324663,
    0.0209728005925975488331, -0.0335235840641009699436, -0.00883349389041023239406,
    0.0226186515445994735657, 0.00169047238348442374366, -0.0137639819628947843386,
    0.00151930577883339921848, 0.00738775745285558364011, -0.00224805318700382470613,
    -0.00339452327640839860199, 0.00181687134380142352548, 0.00126393425811747718263,
    -0.00111148486531863019726, -0.000328078847088019841941, 0.000549053277337363123022,
    0.0000153443902319550321108, -0.000220894403245549385249, 0.0000433672612594569521485,
    0.0000705513878206546507584, -0.0000309866292761993005242, -0.0000163916249616058309924,
    0.0000135432771841678181068, 0.00000184994500311559039079, -0.00000430994155659709238902,
    4.85473139699641168177e-7, 0.00000100212139929717762977, -3.49494860344572764590e-7,
    -1.50988538867158355348e-7, 1.10903123221643939000e-7, 5.35065751546143429062e-9,
    -2.25219383672480577539e-8, 4.22448570636241926805e-9, 2.79397446595398265983e-9,
    -1.29720500146943513987e-9, -1.03141112909697496568e-10, 1.94616489408231502131e-10,
    -3.20339824412324136799e-11, -1.39841571553764148796e-11, 6.33495544097391324961e-12,
    -2.09636319423480054161e-13, -4.42161240987210536733e-13, 1.13805283092143968252e-13,
    -4.51888960746372639445e-16, -5.24302569188420583226e-15, 1.18901238750825287993e-15,
    -1.19928033585287955497e-16, 4.90661506493520369486e-18
};

inline constexpr double kDb38[76] = {
    0.00000142577664167413167206, 0.0000357625199426402301274, 0.000421170266472711643225,
    0.00308308811925375177429, 0.0156372493475721561728, 0.0578899436128592564973,
    0.160071993564110697348, 0.330775781411014651149, 0.496591175311718097660,
    0.493356078517100797573, 0.213050571355578513829, -0.182867667708335890798,
    -0.321675637808997862848, -0.0622665060478243222664, 0.232125963835353108503,
    0.149985119618717019959, -0.141795685973059621671, -0.159912565158244361829,
    0.0856381215561510574161, 0.141414734073382680088, -0.0565864586307273814568,
    -0.114731170710744375239, 0.0430958954330476428814, 0.0872043982620397501191,
    -0.0366051034028742956737, -0.0617662087084131599360, 0.0319898775315378063082,
    0.0400549811051159482095, -0.0268914938808945143855, -0.0231141340205493168086,
    0.0209046452556552434022, 0.0112904972786859648427, -0.0147018820653986821371,
    -0.00413130665603108927412, 0.00921478503219718051203, 0.000562571574840353200574,
    -0.00507131450921834809394, 0.000716982182106401925778, 0.00240069778189097318389,
    -0.000844862666553777500907, -0.000942461407722737796402, 0.000581075975053286366202,
    0.000281763925038067074602, -0.000303102046072661199360, -0.0000455568269666842027469,
    0.000126204335016617070538, -0.0000115540910383371719263, -0.0000417514164854039779730,
    0.0000133417614992135038255, 0.0000103735918404559979563, -0.00000645673042846961916038,
    -0.00000155084435011860257585, 0.00000214996026993966520779, -8.48708758607259307187e-8,
    -5.18773373887414442601e-7, 1.39637754550835548123e-7, 8.40035104689596552693e-8,
    -4.88475793745928676208e-8, -5.42427480028729851113e-9, 1.03470453927485848092e-8,
    -1.43632948779513570685e-9, -1.34919775398344882185e-9, 5.26113255735759849454e-10,
    6.73233649018930868574e-11, -8.27825652253813472733e-11, 1.10169293459945455115e-11,
    6.29153731703950858158e-12, -2.48478923756364285704e-12, 2.62649650406525207049e-14,
    1.80866123627453058227e-13, -4.24981781957146300697e-14, -4.56339716212737310910e-16,
    2.04509967678898890780e-15, -4.40530704248346134245e-16, 4.30459683955879001625e-17,
    -1.71615245108874418873e-18
};

inline constexpr double kDb39[78] = {
    0.00000100539825458719948825, 0.0000258623153343967272235, 0.000312849777831587170003,
    0.00235694461537159877537, 0.0123335972713083183941, 0.0472653843401585134089,
    0.135933197199089380872, 0.294335405883494921341, 0.469360861574043994202,
    0.511941280290306258151, 0.287506947006663397544, -0.108739649944762065239,
    -0.327633310444633988332, -0.140910967823869320305, 0.190618115318368864866,
    0.204583542081524937540, -0.0835676108947133448589, -0.193385929112248321161,
    0.0270327356759756968929, 0.162672948219794130339, -0.00441518234492937017293,
    -0.130746483028454321962, -0.0000400555660506761126381, 0.101801845093999639927,
    -0.00335395376872600991298, -0.0761855506964698231355, 0.00845933073200362649782,
    0.0538983377000454500253, -0.0120393971299735794901, -0.0353191432700474761812,
    0.0129599174543055068342, 0.0209250913931265164654, -0.0115200570728634144983,
    -0.0108415180947904326369, 0.00874680751129760626363, 0.00462465758883689792446,
    -0.00574322261801141134671, -0.00137106636105365764405, 0.00326284780387177835625,
    0.0000247559135962071059586, -0.00158880307517691715488, 0.000323212019960412777754,
    0.000647807744646878002751, -0.000280522223244440422689, -0.000209539895623888431849,
    0.000158968629888285345257, 0.0000455632908722381433223, -0.0000691003604627031064061,
    -6.26034803778544691363e-7, 0.0000236513015950013884085, -0.00000517207626983373572057,
    -0.00000617678634738442596238, 0.00000294867169407890213084, 0.00000107151414552786849775,
    -0.00000104035563419546962020, -3.48479578389755856606e-8, 2.60642255471124498685e-7,
    -5.20571864479862388391e-8, -4.46416572255599658947e-8, 2.09577871718918274331e-8,
    3.77738170605384221857e-9, -4.66010443886316358712e-9, 4.32895036975907147720e-10,
    6.35390497488167881079e-10, -2.09152496902167285807e-10, -3.81123904046831967935e-11,
    3.47584114287894846950e-11, -3.59035784062793895638e-12, -2.77749855644650203474e-12,
    9.65375470255734848601e-13, 1.20240321057748613749e-14, -7.33693778825852511601e-14,
    1.57736113302851307132e-14, 4.10508978708496653994e-16, -7.94442063495408018798e-16,
    1.62998317032937363095e-16, -1.54449387002355492714e-17, 6.00422437459439059841e-19
};

inline constexpr double kDb40[80] = {
    7.09010586592787234938e-7, 0.0000186923361808108394456, 0.000232095131410675800536,
    0.00179810075469808924559, 0.00969847781917846864311, 0.0384281367714226049376,
    0.114765514769148223597, 0.259777862925936977342, 0.438160874691624203756,
    0.519032081670315171581, 0.352095874300518163988, -0.0281705551460571107651,
    -0.312758092358685465096, -0.210275862673200053571, 0.131198004959585099118,
    0.240177387600811019827, -0.0139507494320573196930, -0.204525369512221300080,
    -0.0381472874627264528763, 0.161855965698048790144, 0.0521660296004826118610,
    -0.126732314293477197456, -0.0474109845374356165238, 0.0994201235354212571633,
    0.0349283621406424774342, -0.0772961758814125694817, -0.0209437533885645279672,
    0.0583410157075483081640, 0.00895008291401358366695, -0.0417948769056301973419,
    -0.000594775947777772205038, 0.0278103793603343932071, -0.00388807210201622468963,
    -0.0168217357354210624867, 0.00524505652165810046442, 0.00901856966224308816472,
    -0.00467357317687953559396, -0.00412449039608788937227, 0.00332130806994223164086,
    0.00148392995621577293131, -0.00197475973195397201369, -0.000311873734437574074565,
    0.000992916888044073323568, -0.0000708487465494046550656, -0.000418162471841884333765,
    0.000121112989809573766313, 0.000142527611562707620366, -0.0000787848241278816178155,
    -0.0000356647189794664498021, 0.0000362951175533744701227, 0.00000406601796662491830368,
    -0.0000128883202413575366572, 0.00000165502572501591180292, 0.00000350783328683967747563,
    -0.00000128043144778810470146, -6.68634888703025830021e-7, 4.88346525066915486440e-7,
    5.36123167916727592878e-8, -1.27450892998434396342e-7, 1.74106944030477951950e-8,
    2.28840414484424479317e-8, -8.73972847310418076655e-9, -2.27333392366530486716e-9,
    2.05938869692980424515e-9, -9.96271507030860683745e-11, -2.92883711535059638219e-10,
    8.13392768625115014402e-11, 1.99529857889309581779e-11, -1.44146786608748749902e-11,
    1.07529656626078372637e-12, 1.20668246329909200863e-12, -3.71467792078176960291e-13,
    -1.35226960004513188083e-14, 2.95382966036491409021e-14, -5.81810487079500948197e-15,
    -2.45022028347759908834e-16, 3.07456792627378773461e-16, -6.02337793241669336550e-17,
    5.53973913906587580423e-18, -2.10125350762321931456e-19
};

inline constexpr double kDb41[82] = {
    5.00027597744853858086e-7, 0.0000135029446484115511116, 0.000171979091402970724170,
    0.00136907269165942295145, 0.00760455009076476048376, 0.0311192196548970475859,
    0.0963687708740497693238, 0.227552455453002530804, 0.404490214187062284086,
    0.515997068135340617542, 0.405468146117407186555, 0.0546563646406418354877,
    -0.278874871054075942291, -0.265582879962842208068, 0.0593821504129584394501,
    0.253561802643111427090, 0.0593794845703765753502, -0.191895730272048427742,
    -0.101414239985623601662, 0.138529749482487044613, 0.104666486788719513708,
    -0.102352102588749999818, -0.0910574767076613884578, 0.0791586126934971324093,
    0.0712741948600228583843, -0.0633574319533916908007, -0.0506477769542249591259,
    0.0509193151827016997090, 0.0321495816996770401873, -0.0397543593129257281670,
    -0.0174655688008124824737, 0.0293254818559288137451, 0.00725088941078288655922,
    -0.0199984704148978562620, -0.00124215692509399897679, 0.0123750714347131356964,
    -0.00148613532722824531676, -0.00681397300688449395472, 0.00212680139611447857430,
    0.00325026373881377386446, -0.00175895932216575704639, -0.00127919298686890888282,
    0.00112283872412847441882, 0.000365592493513821283555, -0.000588477916373772325502,
    -0.0000331865972082459638872, 0.000256038052318316779552, -0.0000428639144793962456261,
    -0.0000908605370219829714692, 0.0000364628696592198258113, 0.0000247247755803245303663,
    -0.0000182692941125063770124, -0.00000410403491404706337064, 0.00000677541273301708558199,
    -2.92071454258752387655e-7, -0.00000191534012025044848906, 5.21232362394643684152e-7,
    3.90431347159003057657e-7, -2.22107715448292547403e-7, -4.30060103025886791937e-8,
    6.07657462087096401762e-8, -4.67948650167655873937e-9, -1.13854015770795664961e-8,
    3.52888199431862359003e-9, 1.26115002184762028312e-9, -8.93414510853946072405e-10,
    3.54026704955446965555e-12, 1.32483539747979423026e-10, -3.08480480048283988598e-11,
    -9.92876344303737103726e-12, 5.90678265246882292260e-12, -2.74200394837900299245e-13,
    -5.17017350510189415304e-13, 1.41532896277441387179e-13, 8.74111181267091567569e-15,
    -1.18097958986457214803e-14, 2.13217648633959254060e-15, 1.26367979926758954201e-16,
    -1.18581605422208434687e-16, 2.22319391460286211097e-17, -1.98631820098473822483e-18,
    7.35553573132744337497e-20
};

inline constexpr double kDb42[84] = {
    3.52663636428634206129e-7, 0.00000974929258030674321171, 0.000127288775799998806016,
    0.00104047084357459183701, 0.00594655672087866032745, 0.0251060929172148915329,
    0.0805095652462652318714, 0.197932650415273781973, 0.369635796535060935682,
    0.504372681143086669507, 0.447002763836229726747, 0.135981722693238457272,
    -0.228800260413017028689, -0.303492594369609777705, -0.0186432189326152325209,
    0.243866600491207703569, 0.128695927789004515297, -0.156952797045152240894,
    -0.154723665254929794787, 0.0954510825243695709814, 0.145205421574753957346,
    -0.0605843443335097931289, -0.123441297966684475098, 0.0433737718716085791629,
    0.0986815865762316761263, -0.0355961834116625252050, -0.0744890783963459945024,
    0.0315994513783196800338, 0.0525697675448516640112, -0.0281210274743093110776,
    -0.0340622707360458505898, 0.0238007674728285935002, 0.0197063061508696820127,
    -0.0186107817115242871982, -0.00968832557980569370636, 0.0132255746486338689177,
    0.00357620749920675566124, -0.00843932947489876428128, -0.000472864617776679493333,
    0.00477428910548318137713, -0.000683111768776260711855, -0.00235149939322262432686,
    0.000825331741988104974780, 0.000976625972760108350049, -0.000595505347700871563538,
    -0.000318314438298808030238, 0.000331021544602994195212, 0.0000630745725562361375744,
    -0.000149519687256414542827, 0.00000825183585070915987455, 0.0000549900781591244285318,
    -0.0000153656251947806596329, -0.0000158574584346940022151, 0.00000878061472054893525194,
    0.00000313608389510273463303, -0.00000344064991845154994262, -1.44120409972166476806e-7,
    0.00000101055065957094222234, -1.93116354803822093272e-7, -2.17119342048947559239e-7,
    9.76163650928496922250e-8, 2.84071592801558949760e-8, -2.82775034854739242942e-8,
    5.26385256839524966255e-10, 5.52030194144608761659e-9, -1.37067284668372317741e-9,
    -6.62926762170370255262e-10, 3.80513195621752358522e-10, 1.58566588185815859443e-11,
    -5.89196021666117508892e-11, 1.13521425911460742878e-11, 4.76376050630881194011e-12,
    -2.39219402669054075246e-12, 4.35933948231569129466e-14, 2.18824053432250473390e-13,
    -5.33731016928637753350e-14, -4.75655440846011722213e-15, 4.69151254952173618549e-15,
    -7.76097259134854211004e-16, -6.03847349914681074569e-17, 4.55912467082279102894e-17,
    -8.19638885280243993435e-18, 7.11985584643143094377e-19, -2.57548353684876140072e-20
};

inline constexpr double kDb43[86] = {
    2.48743482739261516142e-7, 0.00000703570555353802408371, 0.0000941093973467505545102,
    0.000789340036522949509283, 0.00463810418866648667918, 0.0201832078313428949751,
    0.0669388330414894403862, 0.171048700020888757270, 0.334664163055567758440,
    0.485752870948066578821, 0.476702146310273391326, 0.212626463773590130976,
    -0.166001096714661532150, -0.322174197059850772805, -0.0966377547889788670080,
    0.212412362485456565098, 0.187064267573992134789, -0.103662400295590337423,
    -0.191497902462287027647, 0.0380302049012323233783, 0.167689914577095332439,
    -0.00717054468840310438721, -0.138750870855802521060, -0.00272883008088811281135,
    0.111480163809968645103, 0.00192842647767539658080, -0.0870180995825877093402,
    0.00296802233361946769711, 0.0652590331800768041261, -0.00799802448426215120820,
    -0.0462724749559888425322, 0.0111353510689374050855, 0.0304481479968890620913,
    -0.0118157440709951623812, -0.0181833975283694260936, 0.0104703427421280719693,
    0.00955026434058744101441, -0.00801027571302669428254, -0.00416259362524700497893,
    0.00535555246943429392525, 0.00127850141748422495242, -0.00313244865568981137712,
    -0.0000373413664806888934323, 0.00159012332500204607750, -0.000312283821253151125852,
    -0.000686722951546314794212, 0.000289520847910684551207, 0.000241204208640607533539,
    -0.000176227623569031226336, -0.0000606666442520331699033, 0.0000834873320429774017876,
    0.00000461622103014236661772, -0.0000318290639981660084956, 0.00000553947095516293146186,
    0.00000960429001388221816053, -0.00000399901459311661047952, -0.00000210779736205481583297,
    0.00000168759203881922842739, 2.21531206989739914798e-7, -5.16826087706744702323e-7,
    6.04413716836788471579e-8, 1.16143017762673733379e-7, -4.12521872525156952287e-8,
    -1.69780528533436359165e-8, 1.28480877303911333986e-8, 5.23788349718934078834e-10,
    -2.61574043078105102850e-9, 5.06308280147441892787e-10, 3.34976851626626316051e-10,
    -1.59047903523542332567e-10, -1.43178547962724141915e-11, 2.57984033637338141622e-11,
    -4.02051088929914862550e-12, -2.22254008150407173813e-12, 9.57551715218471792039e-13,
    1.01054766973291995511e-14, -9.16027693764559923420e-14, 1.99085911545634926480e-14,
    2.37381785153433879876e-15, -1.85262331290649347216e-15, 2.80459564084556173209e-16,
    2.75215482695333778651e-17, -1.74775824344742843678e-17, 3.01857030749575996248e-18,
    -2.55130575552165301332e-19, 9.02000054340035686006e-21
};

inline constexpr double kDb44[88] = {
    1.75455104715503445314e-7, 0.00000507506571156680909678, 0.0000695066302756152777260,
    0.000597814105618450790435, 0.00360873091818185301629, 0.0161712690755703491693,
    0.0554050487716321808388, 0.146918248900716027980, 0.300426698848249794007,
    0.461701759394147241754, 0.495072094942407768228, 0.282077466770057007931,
    -0.0942675755191668228043, -0.321239303057969166743, -0.168834673349921160382,
    0.162365725529043897320, 0.228998176654341441560, -0.0378570308581459436935,
    -0.207361459587640346265, -0.0265393558076375847438, 0.168641317385077435265,
    0.0503570950560679259203, -0.133854600633466086693, -0.0520169163815402821245,
    0.106421966548306774087, 0.0430445437355774984068, -0.0846774597526082491257,
    -0.0301694408027820374886, 0.0664557897724124453367, 0.0173770938982831521315,
    -0.0504478334544136301240, -0.00694839732042930311772, 0.0363157831261339771880,
    -0.000113447239254879253814, -0.0243283187495634389615, 0.00382466634295865557973,
    0.0148789448979980741877, -0.00490091583464126198789, -0.00811742782297505655418,
    0.00435947693803490292271, 0.00381164857309276651558, -0.00315070987427213626089,
    -0.00142840440997186196637, 0.00193102744153563170027, 0.000326969618040763106282,
    -0.00101414002864530962948, 0.0000587092940959132213763, 0.000453053864930250191436,
    -0.000123820210906731603468, -0.000167434205659213560434, 0.0000881060705422831213352,
    0.0000474762137462072531296, -0.0000445767994217592724400, -0.00000766469204865885560376,
    0.0000176941486520422813116, -0.00000136233827569968583864, -0.00000555534184603671693229,
    0.00000170009700088768356499, 0.00000130924823274007619976, -7.98170898669750088666e-7,
    -1.84255363199619568921e-7, 2.56692766502450871043e-7, -1.18052163405021738244e-8,
    -6.01333195389157073508e-8, 1.66140441895321248395e-8, 9.51918205016497814174e-9,
    -5.69765475805640521693e-9, -5.89916521255345030733e-10, 1.21363318759247936194e-9,
    -1.74007633594710681740e-10, -1.64100214081671912617e-10, 6.51841135430289243710e-11,
    9.31864927164054901155e-12, -1.11327915342624292847e-11, 1.35064190791321135804e-12,
    1.01380956757880298475e-12, -3.78780836933963366729e-13, -1.53482635877725173821e-14,
    3.79643043829615526880e-14, -7.33863813182688672413e-15, -1.12367197152275381787e-15,
    7.27486727127695920289e-16, -1.00561492259244141464e-16, -1.21434641114232461443e-17,
    6.68204714111825911894e-18, -1.11054757137700684521e-18, 9.13962571880848207411e-20,
    -3.15975019574471309467e-21
};

inline constexpr double kDb45[90] = {
    1.23766350936090794198e-7, 0.00000365918223334343050274, 0.0000512849898773742051865,
    0.000452033249684058197217, 0.00280129967968395818730, 0.0129156582835561574306,
    0.0456637382633923504046, 0.125473846439725752623, 0.267574304293863570535,
    0.433688779445161388165, 0.502998445449841049750, 0.342512296208588407422,
    -0.0174241469118843349921, -0.301572623997561952262, -0.230346226701702298401,
    0.0982634829460692529481, 0.250879878664572451403, 0.0335543687759777478649,
    -0.200526971002903623255, -0.0903220024373110873701, 0.147578734186241062920,
    0.103873205720353025356, -0.108761955451225766148, -0.0966680470375919172103,
    0.0832966172340089658381, 0.0806061027297802600432, -0.0665980850504702617907,
    -0.0616916246519496690575, 0.0545181081963329258247, 0.0432000781585233997083,
    -0.0443543232361165209308, -0.0271112598550341531794, 0.0348521129221950504154,
    0.0145586184204272619806, -0.0258471717416957573544, -0.00590855298651527943604,
    0.0177653432243220962006, 0.000834465102425323754797, -0.0111356325511751383228,
    0.00147696444996119129380, 0.00625482949558125099714, -0.00202204633988201075920,
    -0.00307200497676115793234, 0.00169443141738003153454, 0.00126178887949725778138,
    -0.00111634963045819916251, -0.000386998799191211502273, 0.000612456077964940458123,
    0.0000475121358113538280288, -0.000283193499320120272356, 0.0000411773740331221719615,
    0.000108957017229509691843, -0.0000406756239896174808009, -0.0000332810897843569115282,
    0.0000227017145527310440733, 0.00000691684010035712302815, -0.00000946704665893458462569,
    -1.68696810875766037916e-7, 0.00000308932223944396270260, -6.53410442680318840894e-7,
    -7.68760921058347413451e-7, 3.62654268519602676954e-7, 1.26629548894130179076e-7,
    -1.23915700810612817360e-7, -3.09295196602137259481e-9, 3.02557624695531110675e-8,
    -6.27165681568451597202e-9, -5.09674845427349680359e-9, 2.46323007192670007010e-9,
    4.25367955427601329387e-10, -5.52092340608402606630e-10, 5.29749518525699925628e-11,
    7.83637051043263742039e-11, -2.61536575357058333155e-11, -5.31008029171567408253e-12,
    4.73815311290355213055e-12, -4.18191483268088810210e-13, -4.53817275619316310960e-13,
    1.48020309636985384447e-13, 1.07158863106500721066e-14, -1.55897010779402495936e-14,
    2.66986144556432997643e-15, 5.13034654704775875044e-16, -2.84159055456074270888e-16,
    3.57490556052491222292e-17, 5.23248292097516401692e-18, -2.54828588331459007472e-18,
    4.08180263123302209071e-19, -3.27321258352291967029e-20, 1.10711506415074017309e-21
};

inline constexpr const double* kDaubechiesLowpass[] = {
    kDb1,
    kDb2,
    kDb3,
    kDb4,
    kDb5,
    kDb6,
    kDb7,
    kDb8,
    kDb9,
    kDb10,
    kDb11,
    kDb12,
    kDb13,
    kDb14,
    kDb15,
    kDb16,
    kDb17,
    kDb18,
    kDb19,
    kDb20,
    kDb21,
    kDb22,
    kDb23,
    kDb24,
    kDb25,
    kDb26,
    kDb27,
    kDb28,
    kDb29,
    kDb30,
    kDb31,
    kDb32,
    kDb33,
    kDb34,
    kDb35,
    kDb36,
    kDb37,
    kDb38,
    kDb39,
    kDb40,
    kDb41,
    kDb42,
    kDb43,
    kDb44,
    kDb45,
};

}  // namespace gwshm::detail
