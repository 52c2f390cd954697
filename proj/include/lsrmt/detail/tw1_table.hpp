// Generated by tools/gen_tw_table.py; do not edit.
#pragma once

#include <array>
#include <string_view>

namespace lsrmt::detail {

inline constexpr std::string_view tw1_provenance =
    "Tracy-Widom beta=1 CDF, x in [-10.0, 8.0] step 0.01; Fredholm determinant det(I - 0.5 Ai(s+(u+v)/2)) with 220-node Gauss-Legendre quadrature (tools/gen_tw_table.py), cross-checked against Painleve II";

inline constexpr double tw1_x_min = -10.0;
inline constexpr double tw1_step = 0.01;

inline constexpr std::array<double, 1801> tw1_cdf = {
    3.1404701492326798e-22, 3.5992463424954818e-22, 4.1241229482036416e-22, 4.7240288081705415e-22,
    5.4102060487370112e-22, 6.1939204608086232e-22, 7.0895335978685057e-22, 8.1124504833293649e-22,
    9.2804334216070269e-22, 1.0613995832457145e-21, 1.2136011802812644e-21, 1.3872371095820569e-21,
    1.585340368572553e-21, 1.8112176877133061e-21, 2.0687768639568193e-21, 2.3623537729320089e-21,
    2.6969451430713295e-21, 3.0780695421067665e-21, 3.5120414150249092e-21, 4.0064015464427018e-21,
    4.5691108664603504e-21, 5.2093951843878243e-21, 5.9379834042216186e-21, 6.766679732464026e-21,
    7.7091812521319559e-21, 8.7805831026683703e-21, 9.9986978620787409e-21, 1.1382521591863662e-20,
    1.2954845118864314e-20, 1.4740550605403128e-20, 1.6768136566969045e-20, 1.9070067329484647e-20,
    2.1682148508540079e-20, 2.4645974730249508e-20, 2.8008309836783202e-20, 3.182084479365192e-20,
    3.6143977442200936e-20, 4.1044061943114564e-20, 4.6596482428704431e-20, 5.288698535205207e-20,
    6.001205622617502e-20, 6.8079593539058532e-20, 7.721314867320935e-20, 8.7550508073683856e-20,
    9.9247814247233455e-20, 1.1247910008221494e-19, 1.2744337016864977e-19, 1.4436285766524826e-19,
    1.6348925763079147e-19, 1.8510416354846105e-19, 2.0952401316112094e-19, 2.3710799167808099e-19,
    2.6825903782940845e-19, 3.0342897315229685e-19, 3.4312587282898002e-19, 3.8792145350354608e-19,
    4.3845987076733037e-19, 4.9545937077115875e-19, 5.5973655305843935e-19, 6.3219619107662421e-19,
    7.1386358641387652e-19, 8.0588908579643729e-19, 9.095570008724495e-19, 1.0263105028734986e-18,
    1.1577766200579014e-18, 1.3057673409092402e-18, 1.4723192795695182e-18, 1.6597174500764881e-18,
    1.8705215854104841e-18, 2.107594415546218e-18, 2.3741490057615634e-18, 2.6737735518379928e-18,
    3.0104987651659458e-18, 3.3888186035031829e-18, 3.8137750713693804e-18, 4.2910056467484155e-18,
    4.8267952715762101e-18, 5.4282058558434976e-18, 6.1031062984313371e-18, 6.8602892655458352e-18,
    7.7095930479104515e-18, 8.6619956977305039e-18, 9.7297738972677745e-18, 1.0926576771483347e-17,
    1.22677235026538e-17, 1.3770232495031305e-17, 1.5453145526274373e-17, 1.7337659636253538e-17,
    1.9447430888156791e-17, 2.1808844522865178e-17, 2.4451312940001199e-17, 2.7407463107887973e-17,
    3.0713905198350628e-17, 3.4411225144600289e-17, 3.8544630149047433e-17, 4.3164507185684767e-17,
    4.8326858602982556e-17, 5.4094135484538887e-17, 6.0535562732524274e-17, 6.7728410039300997e-17,
    7.5758360997641852e-17, 8.4720754060968771e-17, 9.4721668225698917e-17, 1.0587861220170995e-16,
    1.1832248891086369e-16, 1.3219850679934783e-16, 1.4766793227909148e-16, 1.6490963207519398e-16,
    1.8412233003392309e-16, 2.0552618068322603e-16, 2.2936599629972777e-16, 2.559123688493248e-16,
    2.8546611406016871e-16, 3.1836022216637457e-16, 3.5496394820607827e-16, 3.9568610458671117e-16,
    4.4097992344431165e-16, 4.9134681656219246e-16, 5.4734242679478694e-16, 6.0958152279690729e-16,
    6.7874419650769758e-16, 7.5558327884890565e-16, 8.4093159443258689e-16, 9.3570909536473175e-16,
    1.0409344460049413e-15, 1.1577325413884586e-15, 1.2873465733184461e-15, 1.4311502290027573e-15,
    1.5906608542657657e-15, 1.7675543260426109e-15, 1.9636801154346256e-15, 2.1810802718587143e-15,
    2.422008202994647e-15, 2.6889504944461727e-15, 2.9846488851060595e-15, 3.3121276425575384e-15,
    3.6747211894985019e-15, 4.0761051086250967e-15, 4.5203278457344794e-15, 5.0118536779269277e-15,
    5.5555978268530423e-15, 6.156972525283309e-15, 6.8219374002107302e-15, 7.557054391958587e-15,
    8.369542383387451e-15, 9.267344931408061e-15, 1.02591999322907e-14, 1.1354718469104384e-14,
    1.2564464907029307e-14, 1.3900056027706414e-14, 1.5374255433330619e-14, 1.7001088256555502e-14,
    1.8795963653529536e-14, 2.0775799628817215e-14, 2.2959180589639038e-14, 2.536649780208387e-14,
    2.8020140725021548e-14, 3.0944669643355944e-14, 3.4167033045694287e-14, 3.7716780487517006e-14,
    4.1626324400939749e-14, 4.59311883727099e-14, 5.0670313837119516e-14, 5.5886368359875928e-14,
    6.1626102901080061e-14, 6.7940714610943334e-14, 7.4886274997272793e-14, 8.2524177759949415e-14,
    9.0921602410478339e-14, 1.0015208528211616e-13, 1.1029607979807717e-13, 1.2144157426739418e-13,
    1.3368481753629615e-13, 1.4713101341870012e-13, 1.6189519468401856e-13, 1.7810305092577168e-13,
    1.9589192926633142e-13, 2.1541187539567522e-13, 2.3682673579811395e-13, 2.6031544203509595e-13,
    2.8607331179238819e-13, 3.1431354510325191e-13, 3.4526875456114356e-13, 3.7919271312874897e-13,
    4.1636225101143216e-13, 4.5707919860229059e-13, 5.0167264321543446e-13, 5.5050131224600131e-13,
    6.0395609986390542e-13, 6.6246291273798795e-13, 7.2648565198434457e-13, 7.9652959846885729e-13,
    8.7314484962935213e-13, 9.5693024353832252e-13, 1.0485375365139313e-12, 1.1486758976927834e-12,
    1.2581168023532483e-12, 1.3776993509165403e-12, 1.5083359737568908e-12, 1.651018650211713e-12,
    1.806825560739443e-12, 1.9769283681903019e-12, 2.1626001223120178e-12, 2.3652234973187468e-12,
    2.5863002105035274e-12, 2.8274607058997613e-12, 3.0904748947556538e-12, 3.3772636891361534e-12,
    3.6899113492823097e-12, 4.0306790739886584e-12, 4.4020192013519191e-12, 4.8065911483048435e-12,
    5.2472780155998689e-12, 5.727204801631476e-12, 6.2497581482684205e-12, 6.8186071359192955e-12,
    7.437726390042487e-12, 8.1114202671279773e-12, 8.8443494769745751e-12, 9.6415592598719647e-12,
    1.0508510292612748e-11, 1.1451111250873364e-11, 1.2475754758898567e-11, 1.3589354958735411e-11,
    1.4799388811567739e-11, 1.6113940333283033e-11, 1.7541747690040493e-11, 1.9092254553532694e-11,
    2.0775664576647499e-11, 2.2603000434792362e-11, 2.4586167144456208e-11, 2.6738019656899628e-11,
    2.9072436331202979e-11, 3.1604396712014631e-11, 3.4350066109543117e-11, 3.7326885082149853e-11,
    4.0553667015586094e-11, 4.4050701286210944e-11, 4.783986496653032e-11, 5.1944741737392206e-11,
    5.6390750390003922e-11, 6.1205281303684328e-11, 6.6417843706673752e-11, 7.2060223094167263e-11,
    7.8166649236465409e-11, 8.4773977153917759e-11, 9.1921880005200113e-11, 9.9653055911663592e-11,
    1.080134490760786e-10, 1.1705248702992726e-10, 1.2682333232061603e-10, 1.373831551042958e-10,
    1.4879342103417583e-10, 1.6112020149460907e-10, 1.7443450436058295e-10, 1.8881262595686522e-10,
    2.0433653052791064e-10, 2.2109425034698499e-10, 2.3918031881134541e-10, 2.5869622907643145e-10,
    2.7975092275517122e-10, 3.0246131509447346e-10, 3.2695285225635357e-10, 3.5336010625674565e-10,
    3.8182741089838148e-10, 4.1250953791901445e-10, 4.4557241771429702e-10, 4.8119391115634537e-10,
    5.1956462432069078e-10, 5.6088878617497354e-10, 6.0538517340460892e-10, 6.5328810416571521e-10,
    7.0484848955974283e-10, 7.6033495428506381e-10, 8.2003503350072956e-10, 8.8425643702809202e-10,
    9.5332840632003703e-10, 1.0276031444366947e-09, 1.1074573478462942e-09, 1.1932938271998067e-09,
    1.2855432321270974e-09, 1.3846658848475896e-09, 1.4911537288765471e-09, 1.6055323953126219e-09,
    1.7283633992288316e-09, 1.8602464715279213e-09, 2.001822035455069e-09, 2.1537738302646267e-09,
    2.3168316984699631e-09, 2.4917745459719561e-09, 2.6794334674224809e-09, 2.8806950816741749e-09,
    3.0965050452800766e-09, 3.3278717958469029e-09, 3.5758705046222118e-09, 3.8416472684410163e-09,
    4.1264235569823112e-09, 4.4315009068329595e-09, 4.7582659105244529e-09, 5.1081954824487862e-09,
    5.4828624318030425e-09, 5.8839413832635367e-09, 6.3132150029157139e-09, 6.7725806083470977e-09,
    7.2640571623845942e-09, 7.7897926412103538e-09, 8.3520718519959867e-09, 8.953324677787241e-09,
    9.5961347845659036e-09, 1.0283248843292332e-08, 1.1017586232357327e-08, 1.1802249323176324e-08,
    1.2640534306795344e-08, 1.3535942635826004e-08, 1.4492193097441726e-08, 1.5513234551928379e-08,
    1.6603259363704787e-08, 1.7766717570577641e-08, 1.9008331821287705e-08, 2.0333113132362216e-08,
    2.1746377469566835e-08, 2.3253763253955732e-08, 2.4861249782957737e-08, 2.6575176636519155e-08,
    2.8402264115003791e-08, 3.0349634764871949e-08, 3.2424836023304829e-08, 3.4635864070507389e-08,
    3.6991188900055989e-08, 3.9499780721297099e-08, 4.2171137712899809e-08, 4.5015315213477602e-08,
    4.8042956402283477e-08, 5.1265324572527079e-08, 5.4694337006572855e-08, 5.8342600632008234e-08,
    6.2223449405022464e-08, 6.6350983630386047e-08, 7.0740111223830113e-08, 7.540659104875022e-08,
    8.0367078372704634e-08, 8.5639172604550118e-08, 9.1241467376455829e-08, 9.7193603040442322e-08,
    1.035163217987371e-07, 1.1023152543125926e-07, 1.1736233587946593e-07, 1.2493315870594475e-07,
    1.3296974960742138e-07, 1.414992841313487e-07, 1.5055043063656771e-07, 1.6015342677887274e-07,
    1.7034015954261796e-07, 1.811442490472674e-07, 1.9260113627785011e-07, 2.0474817482513299e-07,
    2.1762472698543612e-07, 2.3127226412989934e-07, 2.4573447178997827e-07, 2.6105735949892844e-07,
    2.77289375588267e-07, 2.944815272132541e-07, 3.126875057101488e-07, 3.3196381765729179e-07,
    3.5236992168820019e-07, 3.7396837135926868e-07, 3.9682496441815892e-07, 4.2100889852667027e-07,
    4.4659293379420395e-07, 4.7365356242501642e-07, 5.0227118566246957e-07, 5.3253029837972285e-07,
    5.6451968149914538e-07, 5.9833260272239623e-07, 6.3406702570784428e-07, 6.718258280672675e-07,
    7.1171702852893559e-07, 7.5385402359671668e-07, 7.9835583401481952e-07, 8.4534736145984746e-07,
    8.9495965577335091e-07, 9.473301931267667e-07, 1.0026031654754623e-06, 1.0609297818114332e-06,
    1.1224685814945973e-06, 1.1873857601574898e-06, 1.2558555085929193e-06, 1.3280603650228135e-06,
    1.4041915814602382e-06, 1.4844495041742204e-06, 1.5690439691494624e-06, 1.6581947128857232e-06,
    1.752131799011909e-06, 1.8510960613069067e-06, 1.9553395635601253e-06, 2.0651260769915559e-06,
    2.1807315755927774e-06, 2.3024447501057339e-06, 2.4305675411580224e-06, 2.5654156922107035e-06,
    2.7073193229197201e-06, 2.8566235234337929e-06, 3.0136889704168339e-06, 3.1788925655019164e-06,
    3.352628096580626e-06, 3.5353069229244841e-06, 3.72735868463317e-06, 3.9292320372237205e-06,
    4.1413954120690761e-06, 4.3643378034345176e-06, 4.5985695828947568e-06, 4.8446233418332966e-06,
    5.1030547629397376e-06, 5.3744435213364656e-06, 5.6593942164700522e-06, 5.958537335165408e-06,
    6.2725302470561106e-06, 6.6020582330746239e-06, 6.9478355480021087e-06, 7.3106065179363828e-06,
    7.6911466732923925e-06, 8.0902639189239741e-06, 8.5087997416203233e-06, 8.9476304563817476e-06,
    9.4076684920639724e-06, 9.8898637178659222e-06, 1.0395204811191916e-05, 1.0924720668043432e-05,
    1.1479481857109684e-05, 1.2060602118412934e-05, 1.2669239907578914e-05, 1.3306599986824832e-05,
    1.3973935063743721e-05, 1.4672547478928599e-05, 1.5403790943605653e-05, 1.6169072327919628e-05,
    1.69698535020844e-05, 1.7807653230057158e-05, 1.868404911806013e-05, 1.9600679618330927e-05,
    2.0559246089788071e-05, 2.1561514916358825e-05, 2.2609319684006999e-05, 2.3704563418604766e-05,
    2.4849220884087089e-05, 2.6045340943875456e-05, 2.7295048985640321e-05, 2.8600549410456139e-05,
    2.9964128188526322e-05, 3.1388155481777835e-05, 3.2875088334511187e-05, 3.442747343397267e-05,
    3.6047949941069208e-05, 3.7739252393519732e-05, 3.9504213681227003e-05, 4.1345768096417895e-05,
    4.3266954458619726e-05, 4.5270919316438349e-05, 4.736092022635993e-05, 4.9540329110897175e-05,
    5.1812635695691526e-05, 5.4181451028477609e-05, 5.6650511079112931e-05, 5.9223680423103737e-05,
    6.1904956009105059e-05, 6.4698471011753725e-05, 6.7608498770149267e-05, 7.0639456814025801e-05,
    7.3795910977394398e-05, 7.7082579602134779e-05, 8.0504337830505446e-05, 8.4066221989246475e-05,
    8.7773434065222948e-05, 9.1631346273452461e-05, 9.5645505718778469e-05, 9.9821639151397368e-05,
    0.0001041656578174782, 0.00010868366240537117, 0.00011338194808759714, 0.00011826700966028705,
    0.00012334554677961043, 0.00012862446929634815, 0.00013411090268866774, 0.00013981219359393142,
    0.00014573591543991086, 0.00015188987417492919, 0.00015828211409861699, 0.00016492092379221987,
    0.00017181484214940111, 0.0001789726645071027, 0.00018640344887726817, 0.00019411652227813026,
    0.00020212148716678533, 0.00021042822797097678, 0.00021904691772134003, 0.00022798802478263727,
    0.00023726231968538235, 0.00024688088205466384, 0.00025685510763852641, 0.00026719671543337322,
    0.00027791775490663859, 0.00028903061331546359, 0.00030054802312069631, 0.00031248306949566406,
    0.00032484919792821759, 0.00033766022191454359, 0.00035093033074494044, 0.00036467409737891678,
    0.00037890648640862945, 0.00039364286210901973, 0.0004088989965742599, 0.00042469107793662915,
    0.00044103571866776912, 0.00045794996395975119, 0.00047545130018449911, 0.00049355766342809029,
    0.00051228744809997948, 0.00053165951561212838, 0.00055169320312798331, 0.00057240833237752107,
    0.00059382521853566436, 0.00061596467916177531, 0.00063884804319729407, 0.00066249716001842262,
    0.0006869344085401153, 0.00071218270636958111, 0.00073826551900452804, 0.00076520686907343132,
    0.00079303134561397703, 0.0008217641133865624, 0.00085143092221755636, 0.00088205811637034686,
    0.00091367264393880487, 0.00094630206625917338, 0.00097997456733619494, 0.0010147189632795405,
    0.0010505647117450639, 0.0010875419213769752, 0.0011256813612459395, 0.0011650144702781446,
    0.0012055733666703654, 0.0012473908572859062, 0.0012905004470262127, 0.0013349363481728902,
    0.0013807334896948182, 0.0014279275265135535, 0.0014765548487236406, 0.0015266525907600686,
    0.0015782586405074998, 0.0016314116483457479, 0.0016861510361253415, 0.0017425170060662066,
    0.0018005505495734854, 0.0018602934559654584, 0.0019217883211042912, 0.0019850785559263019,
    0.0020502083948622371, 0.0021172229041424373, 0.0021861679899798578, 0.0022570904066231382,
    0.0023300377642744043, 0.0024050585368624979, 0.0024822020696670184, 0.0025615185867835155,
    0.0026430591984248296, 0.0027268759080491057, 0.0028130216193092807, 0.0029015501428147025,
    0.0029925162026987694, 0.0030859754429843115, 0.0031819844337394629, 0.0032806006770162194,
    0.0033818826125651125, 0.0034858896233160813, 0.0035926820406207258, 0.0037023211492460077,
    0.0038148691921132405, 0.0039303893747732327, 0.0040489458696117602, 0.004170603819776247,
    0.0042954293428161244, 0.0044234895340300963, 0.0045548524695118876, 0.004689587208887562,
    0.0048277637977359646, 0.0049694532696858366, 0.0051147276481813492, 0.0052636599479091491,
    0.0054163241758790892, 0.0055727953321525019, 0.0057331494102084157, 0.0058974633969439165,
    0.006065815272298619, 0.0062382840084985874, 0.0064149495689102432, 0.0065958929065007745,
    0.0067811959618959495, 0.0069709416610290254, 0.0071652139123761383, 0.0073640976037694867,
    0.0075676785987837097, 0.0077760437326894671, 0.0079892808079673489, 0.0082074785893777261,
    0.0084307267985792075, 0.0086591161082928501, 0.0088927381360042503, 0.0091316854372004916,
    0.0093760514981358189, 0.0096259307281221021, 0.0098814184513404488, 0.010142610898166057,
    0.010409605196007825, 0.010682499359654131, 0.010961392281123675, 0.011246383719017122,
    0.011537574287366072, 0.011835065443977671, 0.012138959478271981, 0.012449359498606002,
    0.012766369419089452, 0.013090093945883232, 0.01342063856298199, 0.013758109517481212,
    0.014102613804323077, 0.014454259150524314, 0.014813153998883366, 0.015179407491167893,
    0.015553129450780207, 0.015934430364904002, 0.016323421366130644, 0.016720214213566467,
    0.01712492127342316, 0.017537655499090705, 0.017958530410696744, 0.018387660074153055,
    0.018825159079691588, 0.01927114251989406, 0.019725725967215297, 0.020189025451007533,
    0.020661157434045174, 0.021142238788557078, 0.021632386771768562, 0.02213171900095999,
    0.022640353428042808, 0.023158408313664117, 0.023686002200838378, 0.024223253888118596,
    0.024770282402308611, 0.025327206970724908, 0.025894146993014414, 0.026471222012535198,
    0.02705855168730821, 0.027656255760546273, 0.028264454030769923, 0.02888326632151739,
    0.029512812450659009, 0.030153212199321103, 0.030804585280434955, 0.031467051306913768,
    0.032140729759471659, 0.032825739954093255, 0.033522201009166294, 0.034230231812283143,
    0.034949950986728179, 0.03568147685765842, 0.036424927417990645, 0.037180420294005014,
    0.037948072710679376, 0.038728001456765554, 0.039520322849619788, 0.040325152699801227,
    0.041142606275449869, 0.041972798266458868, 0.04281584274845459, 0.043671853146595385,
    0.044540942199207928, 0.045423221921270303, 0.046318803567759644, 0.047227797596875364,
    0.048150313633159018, 0.049086460430515837, 0.050036345835162935, 0.051000076748512223,
    0.051977759090008652, 0.052969497759933218, 0.05397539660219236, 0.054995558367106179,
    0.056030084674211666, 0.057079075975097038, 0.058142631516283703, 0.059220849302170794,
    0.060313826058060765, 0.061421657193279543, 0.062544436764408143, 0.063682257438644252,
    0.064835210457308251, 0.066003385599509287, 0.067186871145991214, 0.068385753843170236,
    0.069600118867384639, 0.070830049789372157, 0.072075628538988287, 0.073336935370188011,
    0.074614048826279672, 0.075907045705475476, 0.077216001026746792, 0.078540987996008185,
    0.079882077972639493, 0.081239340436365368, 0.082612842954509602, 0.084002651149636245,
    0.085408828667595402, 0.086831437145990328, 0.088270536183076523, 0.089726183307115959,
    0.091198433946193383, 0.092687341398514006, 0.09419295680319785, 0.095715329111581773,
    0.097254505059049048, 0.098810529137393466, 0.10038344356773851, 0.10197328827402193,
    0.10358010085705958, 0.10520391656920298, 0.10684476828960233, 0.1085026865000876,
    0.11017769926168162, 0.11186983219175721, 0.1135791084418477, 0.1153055486761265,
    0.11704917105056425, 0.11880999119277451, 0.1205880221825625, 0.12238327453318031,
    0.12419575617330823, 0.12602547242976148, 0.12787242601094079, 0.12973661699103209,
    0.13161804279496017, 0.13351669818411457, 0.13543257524284744, 0.13736566336575193,
    0.13931594924573443, 0.14128341686287879, 0.14326804747411997, 0.14526981960372018,
    0.1472887090345657, 0.14932468880028429, 0.15137772917818609, 0.15344779768303624,
    0.15553485906166675, 0.15763887528841958, 0.15975980556143898, 0.16189760629980895,
    0.16405223114153566, 0.16622363094238132, 0.16841175377555728, 0.1706165449322613,
    0.17283794692307899, 0.17507589948023655, 0.17733033956071179, 0.17960120135020086,
    0.18188841626794294, 0.1841919129723972, 0.18651161736777463, 0.18884745261142322,
    0.19119933912206158, 0.19356719458886265, 0.19595093398137806, 0.19835046956030625,
    0.20076571088910081, 0.20319656484640788, 0.2056429356393355, 0.20810472481754896,
    0.21058183128818167, 0.21307415133156316, 0.21558157861775326, 0.21810400422387838,
    0.22064131665226347, 0.22319340184935135, 0.22576014322540064, 0.22834142167496324,
    0.23093711559811536, 0.2335471009224579, 0.23617125112585466, 0.23880943725991466,
    0.24146152797420128, 0.24412738954116373, 0.24680688588177421, 0.24949987859187128,
    0.25220622696918099, 0.25492578804103072, 0.25765841659271643, 0.26040396519653425,
    0.26316228424145149, 0.26593322196341262, 0.26871662447626116, 0.27151233580327261,
    0.27432019790927947, 0.27714005073337955, 0.27997173222221328, 0.28281507836379371,
    0.28566992322188167, 0.28853609897088728, 0.29141343593128183, 0.2943017626055211,
    0.29720090571444052, 0.30011069023413028, 0.30303093943326453, 0.30596147491087466,
    0.30890211663454581, 0.31185268297903196, 0.31481299076525804, 0.31778285529971373,
    0.32076209041420867, 0.32375050850598219, 0.32674792057814067, 0.32975413628042444,
    0.33276896395027306, 0.33579221065418269, 0.33882368222932951, 0.34186318332545867,
    0.34491051744700829, 0.34796548699545971, 0.35102789331189771, 0.35409753671976452,
    0.35717421656778847, 0.3602577312730767, 0.36334787836435117, 0.36644445452531799,
    0.36954725563814211, 0.37265607682702911, 0.37577071250188515, 0.37889095640204257,
    0.38201660164003404, 0.38514744074540991, 0.38828326570856214, 0.39142386802456686,
    0.39456903873700072, 0.39771856848174508, 0.40087224753073486, 0.4040298658356638,
    0.40719121307160139, 0.41035607868054436, 0.41352425191484654, 0.41669552188054521,
    0.4198696775805526, 0.42304650795770471, 0.42622580193765164, 0.42940734847157086,
    0.4325909365786999, 0.43577635538866882, 0.4389633941836123, 0.44215184244006567,
    0.44534148987061045, 0.44853212646527751, 0.45172354253267449, 0.45491552874084662,
    0.45810787615783782, 0.46130037629195542, 0.46449282113171925, 0.46768500318548772,
    0.47087671552073962, 0.47406775180301813, 0.4772579063345056, 0.48044697409223935,
    0.48363475076593482, 0.48682103279543154, 0.49000561740772663, 0.49318830265360591,
    0.49636888744384949, 0.49954717158501943, 0.5027229558147861, 0.50589604183684245,
    0.50906623235532567, 0.51223333110880565, 0.51539714290377825, 0.51855747364770211,
    0.52171413038152603, 0.52486692131173651, 0.52801565584190524, 0.53116014460371341,
    0.53430019948748431, 0.53743563367217684, 0.54056626165486277, 0.54369189927966466,
    0.54681236376616871, 0.54992747373728001, 0.5530370492465414, 0.55614091180489844,
    0.5592388844069035, 0.56233079155636334, 0.56541645929142392, 0.56849571520908604,
    0.57156838848914482, 0.57463430991756892, 0.57769331190928286, 0.58074522853038968,
    0.58378989551980354, 0.58682715031029187, 0.58985683204894601, 0.59287878161705321,
    0.59589284164938916, 0.59889885655291397, 0.60189667252488177, 0.60488613757035981,
    0.60786710151915524, 0.61083941604215197, 0.61380293466705327, 0.61675751279354407,
    0.61970300770784359, 0.6226392785966911, 0.62556618656072971, 0.62848359462730208,
    0.6313913677626708, 0.63428937288365017, 0.63717747886864662, 0.64005555656813551,
    0.64292347881454626, 0.64578112043158464, 0.64862835824296805, 0.65146507108060581,
    0.65429113979220122, 0.6571064472482957, 0.65991087834875495, 0.66270432002868684,
    0.66548666126382616, 0.66825779307535216, 0.67101760853416648, 0.67376600276463816,
    0.67650287294780287, 0.67922811832403152, 0.68194164019517778, 0.6846433419261998,
    0.68733312894625598, 0.69001090874931004, 0.6926765908942023, 0.69533008700424415,
    0.69797131076629304, 0.70060017792935414, 0.70321660630269822, 0.70582051575347748,
    0.70841182820389625, 0.71099046762789975, 0.71355636004739864, 0.71610943352805378,
    0.71864961817458772, 0.72117684612568844, 0.72369105154844005, 0.72619217063235053,
    0.72868014158295003, 0.73115490461496346, 0.7336164019450927, 0.73606457778437562,
    0.73849937833016721, 0.74092075175772121, 0.74332864821139366, 0.74572301979547828,
    0.7481038205646583, 0.75047100651411691, 0.75282453556928441, 0.75516436757523808,
    0.7574904642857655, 0.75980278935210666, 0.76210130831135181, 0.76438598857453788,
    0.76665679941443321, 0.76891371195301372, 0.77115669914865048, 0.77338573578300895,
    0.77560079844766383, 0.77780186553045005, 0.77998891720153041, 0.78216193539923073,
    0.78432090381560438, 0.78646580788175646, 0.78859663475294117, 0.79071337329341806,
    0.79281601406110225, 0.79490454929197563, 0.79697897288431963, 0.79903928038272698,
    0.80108546896193022, 0.80311753741044334, 0.80513548611402064, 0.80713931703895159,
    0.80912903371518063, 0.81110464121928327, 0.81306614615727724, 0.81501355664729558,
    0.81694688230213475, 0.81886613421164478, 0.82077132492502847, 0.82266246843299595,
    0.82453958014983009, 0.82640267689532709, 0.8282517768766704, 0.83008689967017757,
    0.83190806620299385, 0.83371529873468664, 0.83550862083877853, 0.83728805738421785,
    0.83905363451677506, 0.84080537964040147, 0.84254332139853338, 0.84426748965535292,
    0.8459779154770144, 0.84767463111284824, 0.84935766997652029, 0.85102706662720318,
    0.85268285675069999, 0.85432507714058592, 0.85595376567934078, 0.85756896131946914,
    0.85917070406465412, 0.86075903495090056, 0.86233399602771577, 0.86389563033929218,
    0.86544398190573901, 0.86697909570433085, 0.86850101765080046, 0.87000979458067562,
    0.8715054742306525, 0.87298810522002812, 0.8744577370321871, 0.87591441999614372,
    0.87735820526815234, 0.87878914481338011, 0.88020729138765519, 0.88161269851928603,
    0.88300542049097219, 0.88438551232177265, 0.88575302974919079, 0.88710802921133203,
    0.88845056782915155, 0.88978070338881465, 0.89109849432414356, 0.89240399969917372,
    0.89369727919081654, 0.89497839307162808, 0.89624740219269761, 0.89750436796664479,
    0.89874935235073616, 0.89998241783012423, 0.90120362740121007, 0.90241304455513616,
    0.90361073326139196, 0.90479675795157444, 0.90597118350326, 0.90713407522402534,
    0.90828549883560061, 0.90942552045815717, 0.91055420659475261, 0.91167162411590374,
    0.91277784024430519, 0.91387292253970909, 0.91495693888394147, 0.91602995746606708,
    0.91709204676771683, 0.91814327554855701, 0.91918371283192446, 0.92021342789060034,
    0.9212324902327681, 0.92224096958809887, 0.92323893589401818, 0.92422645928212732,
    0.92520361006477381, 0.92617045872180825, 0.92712707588748111, 0.9280735323375191,
    0.92900989897634945, 0.92993624682451093, 0.93085264700621195, 0.93175917073706005,
    0.93265588931196775, 0.93354287409320247, 0.93442019649863806, 0.93528792799013294,
    0.93614614006211216, 0.93699490423029463, 0.93783429202059854, 0.93866437495821109,
    0.93948522455682715, 0.94029691230805645, 0.94109950967099765, 0.94189308806198191,
    0.94267771884447904, 0.94345347331917706, 0.94422042271422735, 0.94497863817565264,
    0.94572819075792502, 0.94646915141470533, 0.94720159098975598, 0.94792558020800965,
    0.94864118966680822, 0.94934848982730291, 0.95004755100601668, 0.95073844336656854,
    0.95142123691156577, 0.95209600147464901, 0.95276280671270053, 0.9534217220982123,
    0.95407281691181578, 0.95471616023495676, 0.95535182094274906, 0.95597986769695886,
    0.95660036893916145, 0.95721339288404583, 0.95781900751287108, 0.95841728056707887,
    0.95900827954204915, 0.95959207168100724, 0.96016872396909902, 0.9607383031275708,
    0.96130087560814192, 0.96185650758748964, 0.96240526496189582, 0.96294721334202515,
    0.9634824180478504, 0.96401094410371901, 0.96453285623355378, 0.96504821885619563,
    0.9655570960808737, 0.96605955170282598, 0.96655564919903347, 0.96704545172410872,
    0.96752902210629399, 0.96800642284360072, 0.96847771610008204, 0.96894296370221011,
    0.96940222713540192, 0.96985556754066793, 0.97030304571135439, 0.97074472209004192,
    0.97118065676555121, 0.97161090947005158, 0.97203553957631106, 0.97245460609504086,
    0.97286816767236517, 0.97327628258740095, 0.97367900874995084, 0.97407640369829451,
    0.97446852459709443, 0.97485542823542071, 0.97523717102485452, 0.97561380899772043,
    0.97598539780539906, 0.97635199271675654, 0.97671364861666798, 0.9770704200046304,
    0.97742236099348401, 0.97776952530821903, 0.97811196628487707, 0.97844973686954717,
    0.97878288961745274, 0.97911147669212062, 0.97943554986464076, 0.97975516051301359,
    0.98007035962158173, 0.98038119778053423, 0.9806877251855135, 0.9809899916372774,
    0.98128804654145663, 0.98158193890838452, 0.98187171735300172, 0.98215743009483047,
    0.9824391249580352, 0.9827168493715368, 0.98299065036921507, 0.98326057459016347,
    0.98352666827902158, 0.98378897728637538, 0.98404754706920383, 0.98430242269141621,
    0.98455364882443452, 0.98480126974783122, 0.98504532935004308, 0.98528587112913035,
    0.98552293819360104, 0.98575657326328137, 0.98598681867024796, 0.9862137163598097,
    0.98643730789154371, 0.9866576344403748, 0.98687473679772419, 0.98708865537266821,
    0.98729943019319022, 0.98750710090744276, 0.98771170678506637, 0.98791328671855905,
    0.98811187922467358, 0.98830752244587161, 0.98850025415179887, 0.988690111740819,
    0.98887713224156959, 0.98906135231456416, 0.98924280825382616, 0.98942153598855498,
    0.98959757108483082, 0.98977094874735116, 0.98994170382119151, 0.99010987079360713,
    0.99027548379585539, 0.99043857660504919, 0.99059918264604385, 0.99075733499333973,
    0.99091306637301768, 0.99106640916469713, 0.99121739540351761, 0.99136605678214496,
    0.99151242465279532, 0.991656530029286, 0.99179840358909799, 0.99193807567546666,
    0.99207557629948429, 0.99221093514222891, 0.99234418155689552, 0.99247534457095732,
    0.99260445288833354, 0.99273153489157817, 0.99285661864407226, 0.99297973189224797,
    0.99310090206779444, 0.99322015628991245, 0.99333752136754538, 0.9934530238016438,
    0.99356668978742624, 0.99367854521665611, 0.99378861567992394, 0.99389692646893368,
    0.9940035025788011, 0.99410836871035935, 0.99421154927245692, 0.99431306838427824,
    0.99441294987765938, 0.99451121729940561, 0.99460789391361426, 0.99470300270400713,
    0.99479656637624814, 0.99488860736028517, 0.99497914781266961, 0.99506820961889098,
    0.99515581439570844, 0.99524198349348336, 0.99532673799849891, 0.99541009873530262,
    0.99549208626901808, 0.99557272090767113, 0.99565202270451914, 0.99573001146035678,
    0.99580670672583393, 0.99588212780376462, 0.99595629375143213, 0.99602922338288946,
    0.99610093527124777, 0.99617144775097466, 0.99624077892016583, 0.99630894664283509,
    0.99637596855116939, 0.99644186204780061, 0.99650664430805702, 0.99657033228221725,
    0.99663294269773461, 0.99669449206149008, 0.99675499666199352, 0.99681447257161204,
    0.99687293564876822, 0.99693040154013879, 0.99698688568283722, 0.99704240330659055,
    0.99709696943590354, 0.99715059889222235, 0.99720330629606702, 0.99725510606917034,
    0.99730601243660588, 0.99735603942889606, 0.99740520088410423, 0.99745351044994046,
    0.99750098158582357, 0.99754762756495496, 0.99759346147636818, 0.99763849622696832,
    0.99768274454356287, 0.99772621897487879, 0.99776893189356142, 0.99781089549816715,
    0.99785212181514205, 0.99789262270078438, 0.99793240984319076, 0.99797149476420888,
    0.99800988882134156, 0.99804760320967589, 0.9980846489637667, 0.99812103695953169,
    0.99815677791611079, 0.9981918823977276, 0.9982263608155334, 0.99826022342942811,
    0.99829348034988175, 0.99832614153972998, 0.99835821681596304, 0.99838971585149183,
    0.99842064817691145, 0.99845102318224033, 0.99848085011865073, 0.99851013810017841,
    0.99853889610543334, 0.99856713297927524, 0.99859485743448551, 0.99862207805343328,
    0.99864880328970185, 0.99867504146973296, 0.99870080079442647, 0.99872608934075602,
    0.99875091506332914, 0.99877528579598152, 0.99879920925331822, 0.99882269303225946,
    0.99884574461356934, 0.99886837136335938, 0.998890580534601, 0.99891237926859378,
    0.99893377459644761, 0.99895477344053152, 0.99897538261591057, 0.99899560883178473,
    0.99901545869288699, 0.99903493870089422, 0.99905405525580382, 0.99907281465730557,
    0.99909122310613774, 0.99910928670543264, 0.99912701146203831, 0.99914440328784282,
    0.99916146800106242, 0.99917821132754392, 0.99919463890202054, 0.99921075626938771,
    0.99922656888593919, 0.99924208212060361, 0.99925730125616519, 0.99927223149046474,
    0.99928687793760107, 0.99930124562909606, 0.999315339515078, 0.99932916446542686,
    0.99934272527090917, 0.99935602664431711, 0.9993690732215722, 0.99938186956283892,
    0.99939442015359947, 0.99940672940574471, 0.99941880165863017, 0.99943064118012781,
    0.99944225216766902, 0.99945363874927018, 0.99946480498454415, 0.99947575486571194,
    0.99948649231858322, 0.99949702120354311, 0.99950734531651497, 0.99951746838991806,
    0.99952739409360813, 0.99953712603581601, 0.99954666776406109, 0.99955602276606681,
    0.99956519447065362, 0.99957418624862848, 0.99958300141365997, 0.99959164322314586,
    0.99960011487906197, 0.99960841952881063, 0.99961656026604906, 0.99962454013150837,
    0.99963236211381667, 0.99964002915028372, 0.99964754412770251, 0.99965490988312755,
    0.99966212920464048, 0.99966920483211485, 0.99967613945796097, 0.99968293572787148,
    0.99968959624154352, 0.99969612355341264, 0.99970252017334715, 0.99970878856735879,
    0.99971493115829613, 0.99972095032652408, 0.99972684841059445, 0.99973262770791205,
    0.99973829047539542, 0.99974383893011243, 0.99974927524992752, 0.99975460157412599,
    0.99975982000402774, 0.99976493260360977, 0.99976994140010245, 0.99977484838458419,
    0.99977965551256731, 0.99978436470457732, 0.99978897784671994, 0.99979349679124374,
    0.99979792335709761, 0.99980225933046718, 0.99980650646532321, 0.99981066648394279,
    0.99981474107743984, 0.99981873190626824, 0.9998226406007481, 0.99982646876154602,
    0.9998302179601789, 0.99983388973949616, 0.99983748561416574, 0.99984100707113199,
    0.99984445557009061, 0.9998478325439446, 0.99985113939925263, 0.99985437751667305,
    0.99985754825140671, 0.99986065293362236, 0.99986369286888321, 0.99986666933856394,
    0.99986958360026723, 0.99987243688822525, 0.99987523041369641, 0.99987796536536733,
    0.99988064290973444, 0.99988326419148288, 0.99988583033386957, 0.99988834243909186,
    0.99989080158864041, 0.99989320884367916, 0.99989556524537371, 0.99989787181525969,
    0.9999001295555735, 0.99990233944959339, 0.9999045024619676, 0.99990661953904525,
    0.9999086916091936, 0.99991071958311362, 0.99991270435415924, 0.99991464679863262,
    0.99991654777609518, 0.99991840812965227, 0.99992022868626129, 0.99992201025700123,
    0.99992375363737118, 0.9999254596075583, 0.99992712893271163, 0.99992876236321659,
    0.99993036063495611, 0.9999319244695748, 0.99993345457472793, 0.9999349516443371,
    0.99993641635884578, 0.99993784938544938, 0.99993925137834283, 0.99994062297896191,
    0.99994196481620234, 0.99994327750665535, 0.99994456165483603, 0.99994581785339809,
    0.99994704668334755, 0.99994824871426558, 0.99994942450451429, 0.99995057460143988,
    0.99995169954157848, 0.99995279985085639, 0.99995387604478436, 0.99995492862865032,
    0.99995595809770887, 0.99995696493737363, 0.99995794962338602, 0.99995891262201297,
    0.9999598543902094, 0.99996077537579942, 0.99996167601764763, 0.99996255674582324,
    0.99996341798176791, 0.9999642601384563, 0.99996508362055792, 0.99996588882458981,
    0.99996667613907719, 0.99996744594469789, 0.9999681986144332, 0.99996893451371638,
    0.99996965400057458, 0.99997035742576601, 0.99997104513292812, 0.99997171745870073,
    0.99997237473287071, 0.99997301727849985, 0.99997364541205036, 0.99997425944351603,
    0.99997485967654665, 0.99997544640856428, 0.99997601993089291, 0.9999765805288674,
    0.99997712848195675, 0.99997766406386868, 0.99997818754267309, 0.99997869918090376,
    0.99997919923566381, 0.99997968795874048, 0.99998016559670333, 0.99998063239100754,
    0.99998108857808654, 0.99998153438946946, 0.99998197005185252, 0.99998239578721726,
    0.99998281181290549, 0.9999832183417251, 0.99998361558202509, 0.99998400373779739,
    0.99998438300875292, 0.99998475359041306, 0.99998511567418946, 0.99998546944746836,
    0.99998581509368278, 0.99998615279240555, 0.99998648271941681, 0.9999868050467724,
    0.99998711994289979, 0.99998742757264958, 0.99998772809738079, 0.99998802167502243,
    0.99998830846014852, 0.99998858860404682, 0.99998886225477446, 0.99998912955723551,
    0.99998939065323889, 0.99998964568156201, 0.99998989477801148, 0.99999013807548531,
    0.99999037570403126, 0.99999060779090121, 0.99999083446061598, 0.99999105583501513,
    0.99999127203331162, 0.99999148317214903, 0.99999168936565075, 0.99999189072547756,
    0.99999208736086798, 0.99999227937869706, 0.99999246688352317, 0.99999264997763337,
    0.99999282876109263, 0.99999300333178864, 0.99999317378547581, 0.99999334021582198,
    0.9999935027144512, 0.99999366137098256, 0.99999381627307948, 0.99999396750648362,
    0.99999411515505177, 0.99999425930081132, 0.99999440002398043, 0.99999453740301392,
    0.99999467151464227, 0.99999480243390315, 0.99999493023417985, 0.99999505498723218,
    0.99999517676324068, 0.99999529563082501, 0.99999541165709172, 0.99999552490765364,
    0.99999563544666858, 0.99999574333687247, 0.99999584863960111, 0.99999595141482778,
    0.99999605172118877, 0.99999614961600802, 0.99999624515533636, 0.99999633839396485,
    0.99999642938546329, 0.9999965181821957, 0.99999660483535902, 0.99999668939499575,
    0.99999677191002578, 0.99999685242826752, 0.99999693099646481, 0.99999700766030697,
    0.99999708246445163, 0.99999715545254775, 0.99999722666726021, 0.99999729615028643,
    0.9999973639423787, 0.99999743008336761, 0.99999749461217968, 0.99999755756685182,
    0.99999761898456663, 0.99999767890164726, 0.99999773735360176, 0.99999779437511782,
    0.99999785000010055, 0.99999790426167201, 0.9999979571922033, 0.99999800882332091,
    0.99999805918592732, 0.9999981083102164, 0.99999815622568622, 0.99999820296116204,
    0.9999982485448019, 0.99999829300411558, 0.99999833636598101, 0.99999837865665608,
    0.99999841990178751, 0.99999846012643656, 0.99999849935507812, 0.99999853761162549,
    0.99999857491943267, 0.99999861130131629, 0.99999864677956063, 0.99999868137593195,
    0.99999871511169069, 0.99999874800760369, 0.9999987800839496, 0.99999881136053792,
    0.99999884185671317, 0.99999887159136969, 0.99999890058295648, 0.99999892884949593,
    0.99999895640858139, 0.99999898327739811, 0.99999900947272702, 0.99999903501095233,
    0.99999905990807625, 0.99999908417972017, 0.99999910784114099, 0.99999913090723469,
    0.99999915339254475, 0.99999917531126981, 0.99999919667727455, 0.99999921750409759,
    0.99999923780495081, 0.99999925759273622, 0.9999992768800513, 0.99999929567919044,
    0.9999993140021588, 0.99999933186067225, 0.99999934926617284, 0.99999936622982477,
    0.99999938276252764, 0.99999939887491984, 0.99999941457738928, 0.9999994298800694,
    0.99999944479285507, 0.99999945932540146, 0.99999947348713536, 0.99999948728725463,
    0.99999950073473598, 0.99999951383834096, 0.99999952660662095, 0.99999953904791783,
    0.99999955117037731, 0.99999956298194681, 0.99999957449037802, 0.9999995857032391,
    0.99999959662791593, 0.99999960727161141, 0.99999961764135747, 0.99999962774401197,
    0.9999996375862712, 0.99999964717466394, 0.99999965651556133, 0.99999966561518205,
    0.99999967447958982, 0.99999968311470244, 0.99999969152629242, 0.99999969971999147,
    0.99999970770129487, 0.99999971547555977, 0.99999972304801699, 0.99999973042376633,
    0.9999997376077826, 0.99999974460491803, 0.99999975141990793, 0.99999975805737007,
    0.99999976452180572, 0.99999977081760971, 0.99999977694906583, 0.99999978292035296,
    0.99999978873554662, 0.99999979439862297, 0.999999799913456, 0.99999980528382815,
    0.9999998105134259, 0.99999981560584483, 0.99999982056459047, 0.9999998253930833,
    0.99999983009465709, 0.99999983467256304, 0.99999983912997115, 0.99999984346997339,
    0.99999984769558303, 0.99999985180974127, 0.99999985581531081, 0.99999985971508798,
    0.99999986351179548, 0.9999998672080902, 0.99999987080656227, 0.9999998743097348,
    0.99999987772006749, 0.99999988103996273, 0.9999998842717579, 0.99999988741773282,
    0.9999998904801104, 0.999999893461059, 0.99999989636268849, 0.99999989918705923,
    0.99999990193617716, 0.99999990461199895, 0.99999990721643084, 0.99999990975133146,
    0.99999991221851148, 0.99999991461973703, 0.99999991695672819, 0.99999991923116138,
    0.99999992144467165, 0.99999992359885181, 0.9999999256952532, 0.99999992773538915,
    0.99999992972073393, 0.99999993165272383, 0.99999993353275751, 0.99999993536220022,
    0.99999993714238145, 0.99999993887459571, 0.99999994056010433, 0.99999994220013866,
    0.99999994379589474, 0.99999994534854098, 0.99999994685921467, 0.99999994832902428,
    0.99999994975904949, 0.99999995115034113, 0.99999995250392515, 0.99999995382079843,
    0.99999995510193562, 0.99999995634828165, 0.99999995756076221, 0.9999999587402747,
    0.99999995988769497, 0.99999996100387678, 0.99999996208965014, 0.99999996314582573,
    0.99999996417319181, 0.99999996517251588, 0.99999996614454623, 0.9999999670900116,
    0.9999999680096221, 0.99999996890406673, 0.99999996977402117, 0.99999997062013868,
    0.9999999714430603, 0.99999997224340498, 0.99999997302178067, 0.99999997377877547,
    0.9999999745149637, 0.99999997523090511, 0.99999997592714429, 0.99999997660421036,
    0.99999997726262135, 0.99999997790287831, 0.99999997852547151, 0.99999997913087824,
    0.99999997971956189, 0.99999998029197268, 0.99999998084855279, 0.99999998138973067,
    0.99999998191592199, 0.99999998242753307, 0.99999998292495984, 0.99999998340858554,
    0.99999998387878664, 0.99999998433592674, 0.99999998478036078, 0.99999998521243438,
    0.99999998563248427, 0.99999998604083795, 0.99999998643781451, 0.99999998682372282,
    0.99999998719886596, 0.99999998756353747, 0.99999998791802347, 0.99999998826260283,
    0.99999998859754624, 0.9999999889231177, 0.99999998923957312, 0.9999999895471634,
    0.99999998984613181, 0.99999999013671315, 0.99999999041914012, 0.99999999069363577,
    0.99999999096041825, 0.99999999121969929, 0.99999999147168661, 0.99999999171657983,
    0.99999999195457534,
};

}  // namespace lsrmt::detail
