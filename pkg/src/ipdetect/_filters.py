"""Digital linear filter tables.

Hankel (J0/J1): 201- and 401-point filters of Key (2009), Geophysics 74(2), F9-F20.
Sine/cosine: 81-point filter of Key (2009) and 201-point filter of Key (2012),
Geophysics 77(3), F21-F36.

Values copied verbatim from the published tables (as distributed with empymod,
Apache-2.0). Abscissae are dimensionless: for a transform evaluated at offset r
(or time t) the kernel is sampled at ``base / r`` (or ``base / t``).
"""

import numpy as np


HANKEL_201_BASE = np.array([
    0.0006112527611295728, 0.0006582011330626792, 0.0007087554594672159,
    0.0007631927021868981, 0.0008218110956199024, 0.0008849317805958155,
    0.0009529005637454616, 0.001026089812002297, 0.00110490049261441,
    0.001189764369843323, 0.001281146370384213, 0.001379547130466501,
    0.001485505738589109, 0.001599602688916441, 0.001722463061515276,
    0.001854759946855503, 0.001997218133335814, 0.002150618078036461,
    0.002315800182452862, 0.002493669396634629, 0.002685200176953821,
    0.002891441824663527, 0.003113524234494096, 0.003352664084780651,
    0.00361017150303456, 0.00388745724347613, 0.004186040415850672,
    0.004507556807870229, 0.004853767846875483, 0.005226570249814254,
    0.005628006414404065, 0.006060275608406676, 0.006525746018315052,
    0.007026967723461506, 0.007566686666625634, 0.008147859697679989,
    0.008773670772690183, 0.009447548397216066, 0.01017318440937716,
    0.01095455420558538, 0.01179593851975157, 0.0127019468752835,
    0.01367754283835671, 0.01472807121080859, 0.01585928731163164,
    0.01707738850748481, 0.01838904816496257, 0.01980145221062947,
    0.02132233849911398, 0.02296003920493998, 0.0247235264703394,
    0.0266224615591274, 0.02866724778592989, 0.03086908751073575,
    0.03324004351101861, 0.03579310506765532, 0.03854225912669247,
    0.04150256692682124, 0.04469024651236346, 0.04812276158381668,
    0.05181891717272583, 0.05579896266503613, 0.06008470273734039,
    0.06469961681378547, 0.06966898769808187, 0.07502004008532698,
    0.08078208971247929, 0.0869867039646039, 0.09366787481677047,
    0.1008622050590664, 0.108609108824958, 0.1169510275215943,
    0.1259336623450285, 0.1356062246541897, 0.1460217055752807,
    0.1572371663136276, 0.1693140507634552, 0.182318522128221,
    0.1963218253956815, 0.2114006776535105, 0.2276376883838127,
    0.2451218120391174, 0.2639488353792869, 0.2842219022392174,
    0.3060520786022707, 0.3295589610751891, 0.3548713320980274,
    0.3821278654786651, 0.4114778861171706, 0.4430821880821678,
    0.4771139155210344, 0.5137595112299984, 0.5532197380808739,
    0.5957107789003212, 0.6414654208273198, 0.6907343306373547,
    0.7437874280201796, 0.8009153643346592, 0.8624311149420454,
    0.9286716938412872, 1.0, 1.07680680549622,
    1.159512896362974, 1.248571377864284, 1.344470156832053,
    1.447734614663324, 1.558930485621915, 1.678666956213205,
    1.807600002612004, 1.946435984427591, 2.095935514494364,
    2.256917625888753, 2.430264259001381, 2.616925093246914,
    2.817922749882108, 3.034358394435675, 3.267417769442918,
    3.518377690535413, 3.788613041474606, 4.079604306451588,
    4.392945680918757, 4.730353805388542, 5.093677170047323,
    5.484906241707685, 5.906184368579528, 6.359819522601831,
    6.848296943665372, 7.374292754997836, 7.940688624303139,
    8.550587550976035, 9.207330865882248, 9.91451653683741,
    10.67601888007134, 11.49600978566695, 12.37898157325731,
    13.32977160319577, 14.35358877803146, 15.45604207947845,
    16.64317129721834, 17.92148011788406, 19.29797175550276,
    20.7801873185992, 22.37624712415386, 24.0948951847541,
    25.94554711266131, 27.9383417032365, 30.08419648032392,
    32.39486750789821, 34.88301379565316, 37.56226665137786,
    40.44730436006738, 43.5539325988975, 46.89917102861648,
    50.50134653574537, 54.38019363641357, 58.55696259189233,
    63.05453582813728, 67.89755329714343, 73.11254746690634,
    78.72808867953015, 84.77494167382795, 91.28623412992303,
    98.29763815922249, 105.8475657340557, 113.9773791276396,
    122.7316175172651, 132.1582409921502, 142.3088933027569,
    153.239184791044, 165.008997051689, 177.6828109933644,
    191.3300600973533, 206.0255108088307, 221.8496721447841,
    238.8892367626087, 257.2375559057747, 276.9951508285525,
    298.2702635016372, 321.1794496157137, 345.848217131731,
    372.4117138761822, 401.015467948384, 431.816184996071,
    464.9826067271839, 500.696435361204, 539.1533290846429,
    580.5639739642864, 625.1552381906738, 673.1714149753277,
    724.8755609109528, 780.5509371268035, 840.5025611345947,
    905.0588778667341, 974.5735590616712, 1049.427440854279,
    1130.03061018637, 1216.824651467729, 1310.285065796017,
    1410.923875989213, 1519.292431702289, 1635.984429995926,
])

HANKEL_201_J0 = np.array([
    0.1104702818216325, -0.3002860174042879, 0.0,
    0.9304611998317738, -1.237989456789895, 0.0,
    1.522782496923861, -1.481262207187227, 0.0,
    1.200938682543965, -1.042356281617017, 0.0,
    0.8186482154233182, -0.7837979439107681, 0.0,
    1.072087935017888, -2.017973482744253, 2.638551914228436,
    -2.91697381041714, 2.932547717791041, -2.782030176901836,
    2.548634287940637, -2.286132540834447, 2.028668029433413,
    -1.790466549754032, 1.579778206432123, -1.395100794535786,
    1.236899777150533, -1.099633354001948, 0.9829180606149369,
    -0.8808127495830721, 0.793941732291194, -0.7166399975760631,
    0.6508052453577512, -0.590908776365098, 0.5400346833052113,
    -0.4925062292020488, 0.4525012829058494, -0.413928215127945,
    0.3820303825432799, -0.3500694920581675, 0.3243907465091445,
    -0.2973991010648227, 0.2766317890637754, -0.2534315625567141,
    0.2366617712595763, -0.2163875214294563, 0.2029716420595088,
    -0.1849663778885546, 0.1744470283910267, -0.158190178617123,
    0.1502386381629129, -0.1352956168139171, 0.1296732438173242,
    -0.1156619860385481, 0.1121981827706036, -0.09877037098650596,
    0.09735307747326948, -0.08418324552747586, 0.08475347956447533,
    -0.07152829800825916, 0.07407480907190452, -0.0604833687278039,
    0.06504162604072715, -0.05077074526100943, 0.0574270623819205,
    -0.04215804851336973, 0.05105276831205472, -0.0344540281601669,
    0.0457813905980996, -0.02749842403920171, 0.04150734318146184,
    -0.02115449634951816, 0.03815224456264026, -0.01530500719575409,
    0.03566006962242232, -0.009844572094042197, 0.03398735588004622,
    -0.004669634342048067, 0.03309505748308261, 0.0003248775057265341,
    0.03294860285661111, 0.005240451270870069, 0.03352191931272241,
    0.01016839266998432, 0.03479748010810809, 0.01518640694860538,
    0.03675989077470884, 0.02035623099573585, 0.03938537294158406,
    0.02571720552065411, 0.04262879025301092, 0.03127265047233792,
    0.04640586621922704, 0.03696789312241264, 0.05056664152720505,
    0.04265736230160079, 0.05485681544583107, 0.04805697373905592,
    0.05886326726197704, 0.0526793423779762, 0.06194081754102766,
    0.05575263672089661, 0.06312348308951768, 0.05613171205140025,
    0.06103877063939782, 0.05223073389072554, 0.05387340754058757,
    0.04205003959253396, 0.03949537291826706, 0.02344464896766128,
    0.01592975900866907, -0.005112454956546657, -0.01750424757311479,
    -0.04293028583599693, -0.05806536835195215, -0.08443837687273714,
    -0.09651641994648259, -0.1160353562902818, -0.1145716151033802,
    -0.1152746912280352, -0.08753115163764941, -0.0591736760131237,
    -0.0006660378399098311, 0.049664944833619, 0.1157206357429209,
    0.1448966611107768, 0.1588998330585965, 0.1031590212340854,
    0.02389465737393602, -0.1007600802615937, -0.1701081679147513,
    -0.1806596339730873, -0.05044220811489127, 0.1067558829070489,
    0.2243843205181916, 0.1124861192136151, -0.1060750025290042,
    -0.2494689576049384, -0.02532563907981785, 0.2313093162590108,
    0.1265041517428334, -0.271689556450126, -0.05741673301698751,
    0.2828355798553848, -0.1151529184187685, -0.1895238214387882,
    0.3498981818372285, -0.3283594487966644, 0.2228689935519562,
    -0.1191882703384384, 0.04914136861200422, -0.01085046330669215,
    -0.006989673166059397, 0.01396225098602933, -0.01583247654053119,
    0.01553798887482501, -0.01443534141636538, 0.01310934487425667,
    -0.0117956256192321, 0.01057909167982074, -0.00948212915526581,
    0.00850263634641782, -0.007630076138978968, 0.006852043148244981,
    -0.006156761038065365, 0.005533849408416496, -0.004974383010461074,
    0.004470699747473056, -0.004016161870832697, 0.003604955260613827,
    -0.003231951863754572, 0.002892630190613161, -0.002583034645430386,
    0.002299750969077188, -0.002039879838855092, 0.001801000017171617,
    -0.001581121784044337, 0.00137863789679707, -0.001192281463551114,
    0.001021096380613436, -0.0008644169540225837, 0.0007218438967094129,
    -0.000593200632335106, 0.0004784596555937276, -0.0003776406369869407,
    0.0002906937486164167, -0.0002173880970439557, 0.0001572247021446439,
    -0.0001093880480994978, 7.274278828090175e-05, -4.58750857933432e-05,
    2.717284254234203e-05, -1.493569664311702e-05, 7.502072444202401e-06,
    -3.374980009202976e-06, 1.323028566570774e-06, -4.342813347631881e-07,
    1.12052938922574e-07, -2.023679217396607e-08, 1.923133952677995e-09,
])

HANKEL_201_J1 = np.array([
    1.28963392714436e-05, -4.692852957012775e-05, 5.712407500240781e-05,
    0.0, -5.4018983565044e-05, 0.0,
    0.0001163813605855986, -0.0001341585158986474, 0.0,
    0.0001563529882751311, -0.0001701932285008713, 0.0,
    0.0002685212722282496, -0.0005148623386148907, 0.0006653519984942213,
    -0.0007072232255490351, 0.0006684047762347991, -0.0005847964888682289,
    0.0004877023048974497, -0.0003939313465485314, 0.0003136345180982827,
    -0.0002470064062519923, 0.0001953997902093073, -0.0001539602296158165,
    0.000123452983256531, -9.817008106125012e-05, 8.058804362211881e-05,
    -6.451459975546781e-05, 5.456430430893415e-05, -4.344419043404446e-05,
    3.815523049837875e-05, -2.949393655677912e-05, 2.732187176767718e-05,
    -1.959842972127203e-05, 1.982911726363689e-05, -1.20090479130296e-05,
    1.443251606646564e-05, -5.683761857979987e-06, 1.04359455517734e-05,
    4.513240229146117e-08, 7.457609318727016e-06, 5.653216751529018e-06,
    5.308688404222969e-06, 1.152796570665543e-05, 3.932961600888582e-06,
    1.803352844385906e-05, 3.380683574927984e-06, 2.555716029426899e-05,
    3.803729181402945e-06, 3.454895491783953e-05, 5.466139820523614e-06,
    4.556234770039426e-05, 8.768101084525483e-06, 5.93009737933533e-05,
    1.428416302046287e-05, 7.667672615961499e-05, 2.281866040881824e-05,
    9.888436530447273e-05, 3.548288867698162e-05, 0.0001274995405373852,
    5.380041779170104e-05, 0.0001646090070216299, 7.984956415148433e-05,
    0.0002129842798716441, 0.0001164554629053559, 0.0002763133928114338,
    0.0001674485387417859, 0.0003595100112861982, 0.000238011827633985,
    0.000469125341707757, 0.0003351463657538389, 0.0006138970952511212,
    0.0004682919161509869, 0.0008054805703670692, 0.0006501519986304682,
    0.001059417913885959, 0.0008977881651498095, 0.001396414494631849,
    0.001234064772364374, 0.001844009097024346, 0.001689538327387063,
    0.002438744274863229, 0.002304895516259244, 0.003228952488337877,
    0.003134049181497694, 0.004278260457055239, 0.004247981356211152,
    0.005669864127830826, 0.005739341687299852, 0.007511500876566557,
    0.007727614768189288, 0.009940768446104526, 0.01036426807004136,
    0.01312987922331795, 0.0138365214409302, 0.01728788292640136,
    0.01836695924406547, 0.02265651442167874, 0.02420372071766719,
    0.02949262366900291, 0.0315919163125884, 0.03802499854417571,
    0.04071065391868849, 0.04836588871048378, 0.05155150426795294,
    0.06034835565661112, 0.06370530818484274, 0.0732537478760265,
    0.07602246037354336, 0.08540182884134039, 0.08613756797984258,
    0.0936304521200181, 0.08994780552031496, 0.09285438346694046,
    0.08138538169597652, 0.07625701418518774, 0.05331840281941071,
    0.03728410637826844, 0.001088918303862871, -0.02482185562667677,
    -0.06966985038573692, -0.09508370436510773, -0.132045779687795,
    -0.1333188913518803, -0.134567983165602, -0.08403605511993056,
    -0.0327015330965538, 0.06374700977990792, 0.1243720031600276,
    0.1818967705583269, 0.1375740652175917, 0.05811873304105276,
    -0.1043087758627017, -0.1815595823147628, -0.1819917129979687,
    0.01631402693428312, 0.175237563247441, 0.2152308945759099,
    -0.06135834728025826, -0.2260012732339317, -0.1058818826360049,
    0.2751720328057493, 0.07282078436121274, -0.2453904197631155,
    -0.02981552944151773, 0.3295321158355015, -0.3395688755289581,
    0.1437347757121746, 0.05569137331864311, -0.1618975349034848,
    0.1840881618330268, -0.163847565068553, 0.1323098979187242,
    -0.1035844311836129, 0.08132823321716304, -0.06502108525281801,
    0.05316632459343718, -0.0444148368962873, 0.03779017256454915,
    -0.03263631595413427, 0.02852104339616387, -0.02515785440611284,
    0.02235339482483744, -0.0199741604689476, 0.01792574037444691,
    -0.01613980618851269, 0.01456582802493779, -0.01316569266298338,
    0.01191013283575226, -0.01077631048875747, 0.009746151537603939,
    -0.0088051798566843, 0.007941688885035929, -0.00714614581153625,
    0.006410759357461669, -0.005729165010828318, 0.005096195694120956,
    -0.004507714364593528, 0.003960490050623528, -0.003452101711144719,
    0.002980856037463172, -0.002545706551739226, 0.002146162475389078,
    -0.001782177147988815, 0.001454007747414243, -0.001162041366288416,
    0.0009065878213110874, -0.0006876473801626548, 0.000504671833560319,
    -0.0003563489117729183, 0.0002404501739881472, -0.0001537865721775565,
    9.230834105005988e-05, -5.136252914208434e-05, 2.60831821218588e-05,
    -1.184499677743133e-05, 4.678587718668116e-06, -1.544064223784288e-06,
    3.995921803021977e-07, -7.219416019819105e-08, 6.844864105885603e-09,
])

SINCOS_81_BASE = np.array([
    0.0003354626279025119, 0.0004097349789797864, 0.0005004514334406104,
    0.0006112527611295723, 0.0007465858083766792, 0.0009118819655545162,
    0.001113775147844802, 0.001360368037547893, 0.001661557273173934,
    0.002029430636295734, 0.002478752176666358, 0.003027554745375813,
    0.003697863716482929, 0.004516580942612666, 0.005516564420760772,
    0.006737946999085467, 0.008229747049020023, 0.01005183574463358,
    0.01227733990306844, 0.0149955768204777, 0.01831563888873418,
    0.02237077185616559, 0.02732372244729256, 0.03337326996032607,
    0.0407622039783662, 0.04978706836786394, 0.06081006262521795,
    0.07427357821433388, 0.09071795328941247, 0.1108031583623339,
    0.1353352832366127, 0.1652988882215865, 0.2018965179946554,
    0.2465969639416064, 0.301194211912202, 0.3678794411714423,
    0.4493289641172216, 0.5488116360940264, 0.6703200460356393,
    0.8187307530779818, 1.0, 1.22140275816017,
    1.49182469764127, 1.822118800390509, 2.225540928492468,
    2.718281828459046, 3.320116922736548, 4.055199966844675,
    4.953032424395115, 6.049647464412947, 7.38905609893065,
    9.025013499434122, 11.0231763806416, 13.46373803500169,
    16.44464677109706, 20.08553692318767, 24.53253019710935,
    29.96410004739703, 36.59823444367799, 44.70118449330084,
    54.59815003314424, 66.68633104092515, 81.45086866496814,
    99.48431564193386, 121.510417518735, 148.4131591025766,
    181.2722418751512, 221.4064162041872, 270.4264074261528,
    330.2995599096489, 403.4287934927351, 492.7490410932563,
    601.8450378720822, 735.0951892419732, 897.8472916504184,
    1096.633158428459, 1339.430764394418, 1635.984429995927,
    1998.195895104119, 2440.601977624501, 2980.957987041728,
])

SINCOS_81_SIN = np.array([
    7.478326513505658e-07, -2.57285042506556e-06, 5.225955618519281e-06,
    -7.35253961014004e-06, 8.768819961093828e-06, -8.56000437084134e-06,
    8.101932279460349e-06, -5.983552716117552e-06, 5.036792825138655e-06,
    -1.584355068233649e-06, 1.426050228179462e-06, 3.972863429067356e-06,
    -1.903788077376088e-06, 1.144652944379527e-05, -4.32777399819603e-06,
    2.297298998355334e-05, -4.391227697686659e-06, 4.291202395830839e-05,
    1.760279032167125e-06, 8.017887907026914e-05, 2.364651853689879e-05,
    0.0001535031685829202, 8.375427119939347e-05, 0.0003030115685600468,
    0.0002339455351760637, 0.0006157392107422657, 0.0005921808556382737,
    0.001281873037121434, 0.001424276189020714, 0.002718506171172064,
    0.003324504626808429, 0.005839859904586436, 0.007608663600764702,
    0.01263571470998938, 0.01714199295539484, 0.02735013970005427,
    0.03794840483226463, 0.05858519896601026, 0.08166914231915734,
    0.1215508018998907, 0.1658946642767184, 0.2324389477118542,
    0.293895662511884, 0.3572525844816433, 0.3479235360502319,
    0.2294314115090992, -0.1250412450354792, -0.634098674302745,
    -0.9703404081656508, -0.2734109755210948, 1.321852608494946,
    0.6762199721133603, -2.093257651144232, 1.707842350925794,
    -0.8844618831465598, 0.3720792781726873, -0.1481509947473694,
    0.06124339615448667, -0.02726194382687923, 0.01307668436907975,
    -0.006682101544475918, 0.003599101395415812, -0.002030735143712865,
    0.001197624324158372, -0.0007382202519234128, 0.0004756906961407787,
    -0.0003199977708080284, 0.0002238628518300115, -0.0001618377502708346,
    0.0001199233854156409, -9.025345928219504e-05, 6.830860296946832e-05,
    -5.143409372298764e-05, 3.804574823200909e-05, -2.720604959632104e-05,
    1.839913059679674e-05, -1.140157702141663e-05, 6.172802138985788e-06,
    -2.706562852604888e-06, 8.403636781016683e-07, -1.356300450956746e-07,
])

SINCOS_81_COS = np.array([
    0.01746412733678043, -0.07658725022064888, 0.1761673907472465,
    -0.2840940679113589, 0.3680388960144733, -0.4115498161707958,
    0.4181209762362728, -0.3967204599348831, 0.360882969100827,
    -0.3171870084102961, 0.2744932842186247, -0.2324673650676961,
    0.1971144816936984, -0.1634915360178986, 0.1381406405905393,
    -0.1125728533897677, 0.09619580319372194, -0.07640431432353632,
    0.06748891657821673, -0.05097864570224415, 0.04853609305288441,
    -0.03293272689265632, 0.0367717598462038, -0.01969323595300588,
    0.03053726798991684, -0.009301135480582538, 0.02895215492109734,
    -0.0001875526095801418, 0.03181452657662026, 0.009025726238227111,
    0.03955376604096631, 0.01966766645672513, 0.05318782805621459,
    0.0330057587562011, 0.07409212944640006, 0.04972863917303501,
    0.1029344264288086, 0.06776855697600163, 0.1357865756912759,
    0.07511614666518443, 0.152221828724026, 0.03034571997381229,
    0.08802563675323094, -0.1689255322598353, -0.1756581788680092,
    -0.6123863775740898, -0.5098359641153184, -0.6736869803920745,
    0.4599561125225532, 0.8907010262082216, 1.039153770711999,
    -2.178135931072732, 0.8040971159674268, 0.5659848584656202,
    -0.9349050336534268, 0.8006099486213468, -0.5944960111930493,
    0.436961430489244, -0.3292566347310282, 0.2547426420681868,
    -0.2010899026277397, 0.1609467208423519, -0.1299975550484158,
    0.1056082501090365, -0.08608337452556068, 0.07027252107999236,
    -0.05735742622053085, 0.04673270108060494, -0.03793635725863799,
    0.03060786160620013, -0.0244622055472634, 0.01927399223200865,
    -0.01486843016804444, 0.01111747692371507, -0.007939442960305236,
    0.005298852472637883, -0.003200104589830043, 0.001665382777953919,
    -0.0006913074254614758, 0.0001999065225130592, -2.955159288961187e-05,
])

SINCOS_201_BASE = np.array([
    9.189813578979554e-07, 1.0560236258145801e-06, 1.2135021985967225e-06,
    1.3944646218148563e-06, 1.6024129035298632e-06, 1.8413712856029165e-06,
    2.1159641213409353e-06, 2.4315053665758195e-06, 2.7941014160203776e-06,
    3.210769275003213e-06, 3.689572353457292e-06, 4.239776510064799e-06,
    4.872029366344634e-06, 5.598566360791909e-06, 6.433447530655468e-06,
    7.392829603584875e-06, 8.495278664699473e-06, 9.76212944985262e-06,
    1.1217898218180574e-05, 1.2890757193898812e-05, 1.481307975880396e-05,
    1.702206694611721e-05, 1.9560467359658073e-05, 2.2477404450316962e-05,
    2.582932715938754e-05, 2.968110232572986e-05, 3.410726999716921e-05,
    3.919348593907708e-05, 4.5038179255745865e-05, 5.175445720305997e-05,
    5.947229405464145e-05, 6.834104638068957e-05, 7.853234341551448e-05,
    9.024340844852722e-05, 0.0001037008755146715, 0.00011916517524538292,
    0.00013693557475562244, 0.0001573559690995309, 0.00018082153637169376,
    0.0002077863852443916, 0.00023877234293696414, 0.00027437905368319086,
    0.00031529558312353735, 0.0003623137531919468, 0.0004163434655556243,
    0.0004784303101489888, 0.0005497757995644025, 0.000631760620878206,
    0.0007259713548843875, 0.0008342311798099197, 0.000958635153694019,
    0.0011015907582204575, 0.0012658644886123726, 0.0014546353912032167,
    0.0016715565847497888, 0.0019208259560556996, 0.0022072673980160704,
    0.0025364241622125167, 0.002914666132629855, 0.0033493130964692705,
    0.0038487763976105395, 0.004422721714019329, 0.005082256109188865,
    0.005840142977459474, 0.006711049042865494, 0.0077118281914628686,
    0.008861847629897193, 0.010183362682074693, 0.011701947477049383,
    0.013446989862853833, 0.015452260123909515, 0.017756564507909106,
    0.020404496209307014, 0.0234472983425469, 0.026943855605395223,
    0.030961833823176868, 0.035578989426519304, 0.04088467420378679,
    0.04698156444836709, 0.05398764796349119, 0.06203850737735829,
    0.07128994395557388, 0.08192099268725626, 0.09413738699314525,
    0.10817554010518914, 0.12430712016577938, 0.1428443075845412,
    0.16414583639372404, 0.18862393651527715, 0.216752311287255,
    0.24907530463166816, 0.28621843526798946, 0.32890050183176844,
    0.377947493158165, 0.43430857292399505, 0.49907444798513595,
    0.5734984758757153, 0.6590209199441206, 0.7572968215143355,
    0.8702280284582515, 1.0, 1.149124100003605,
    1.3204861972090955, 1.5174025129350848, 1.743683797019738,
    2.003709073941175, 2.30251038626171, 2.645870175361941,
    3.040433183989171, 3.4938350461726517, 4.014850052994202,
    4.613560953796389, 5.30155407884305, 6.092143559470961,
    7.000628984869827, 8.04459148169769, 9.24423394630253,
    10.622772013767669, 12.206883329864255, 14.027223820279268,
    16.11902094802755, 18.52275543984142, 21.284944674394648,
    24.45904289259027, 28.106475650897377, 32.297828536610695,
    37.11421314920351, 42.64883678242044, 49.00880618379955,
    56.317200298209784, 64.71545210740304, 74.36608565924594,
    85.45586125397202, 98.19938965350356, 112.84328525648564,
    129.67093861180905, 149.00800062891784, 171.22868461604187,
    196.76300810421012, 226.10511460175258, 259.822836322951,
    298.5686829499951, 343.0924690841749, 394.2558247543669,
    453.04886979204105, 520.6093747574298, 598.2447792215706,
    687.4574935048429, 789.973973514487, 907.7781313411069,
    1043.149728180304, 1198.7084925641964, 1377.4648176845108,
    1582.8780189083436, 1818.9232788935387, 2090.1685758341446,
    2401.863083561229, 2760.0387542291814, 3171.62704942868,
    3644.5930787218194, 4188.0897414655765, 4812.634854895967,
    5530.314696278305, 6355.017898097525, 7302.704222658115,
    8391.713417454528, 9643.120128320623, 11081.141738683076,
    12733.607027476588, 14632.494715248606, 16814.552320467552,
    19322.007302220827, 22203.38425142758, 25514.443944955918,
    29319.262435339933, 33691.47105877948, 38715.68135821746,
    44489.12249678804, 51123.52284907166, 58747.27218295328,
    67507.90627490297, 77574.96204127555, 89143.2584384947,
    102436.66662452392, 117712.4423422755, 135266.2043657935,
    155437.65535274608, 178617.1558138951, 205253.27841984577,
    235861.48883699448, 271034.12108532194, 311451.84046243853,
    357896.8158658658, 411267.85642601945, 472597.8053759612,
    543073.527766331, 624058.8788302675, 717121.0974850894,
    824061.1357411519, 946948.5109564993, 1088161.3554026424,
])

SINCOS_201_SIN = np.array([
    -5.860270446897583e-10, 4.804860886569125e-09, -1.9771446411637653e-08,
    5.526967121966961e-08, -1.1943308954933238e-07, 2.146322128646729e-07,
    -3.361868916830314e-07, 4.7460375561491547e-07, -6.201039377469003e-07,
    7.667668729158013e-07, -9.138209713545467e-07, 1.0643058622431453e-06,
    -1.2227765259769829e-06, 1.3937672563527502e-06, -1.5810499935024131e-06,
    1.7877429029287643e-06, -2.0163554732931835e-06, 2.2692361668040396e-06,
    -2.548445675375346e-06, 2.856245418006529e-06, -3.194637947288514e-06,
    3.566062724581518e-06, -3.972508687952136e-06, 4.416688090004955e-06,
    -4.900483248431876e-06, 5.427006191197884e-06, -5.997895416421125e-06,
    6.616892762116275e-06, -7.285111607935427e-06, 8.007271715105041e-06,
    -8.783462307453753e-06, 9.620027266686968e-06, -1.0515203893806995e-05,
    1.1478097778214146e-05, -1.2503644637963446e-05, 1.3605711023452051e-05,
    -1.4773445946482213e-05, 1.6028992588028293e-05, -1.7351362255724533e-05,
    1.8777046268328975e-05, -2.0267260460262344e-05, 2.1883367382220654e-05,
    -2.3555377916627267e-05, 2.5387811572432832e-05, -2.7256008695400006e-05,
    2.9339419633021675e-05, -3.141766049693187e-05, 3.380035425214158e-05,
    -3.609962085325173e-05, 3.885136445147936e-05, -4.137481449654436e-05,
    4.459945867750689e-05, -4.733267041424394e-05, 5.118888534555614e-05,
    -5.408141127621665e-05, 5.881722332552103e-05, -6.174859568803177e-05,
    6.7759540724915e-05, -7.047766817461314e-05, 7.840557863792899e-05,
    -8.041639094370473e-05, 9.131832786389696e-05, -9.168958695347435e-05,
    0.00010732811343723065, -0.0001043424372870305, 0.00012768616500544454,
    -0.0001182296393871964, 0.00015431866320930474, -0.00013280640984775213,
    0.00019025153589598097, -0.00014674319163166278, 0.00024032678429752795,
    -0.00015722591368834836, 0.0003124183907488046, -0.00015869843609971545,
    0.0004195067259288861, -0.0001406198715774752, 0.0005832309204521852,
    -8.348905175264686e-05, 0.0008399875495666581, 4.8166642275560894e-05,
    0.001251413401861841, 0.00031809381315641577, 0.0019223958368384385,
    0.0008397737647305294, 0.0030319286374562394, 0.0018135564849093052,
    0.004885622001793517, 0.0035901028334771145, 0.008003867686684008,
    0.00677643830418319, 0.013266048500372144, 0.012406252926137538,
    0.02213442287040639, 0.02219191186293954, 0.03696393574918947,
    0.03882952530156707, 0.06130882484977365, 0.06614094782555074,
    0.0997979016990756, 0.10824048046010233, 0.15616018092254505,
    0.1653332722282565, 0.22564430322919368, 0.22062815143611,
    0.27477185256445674, 0.21146243753121693, 0.20743923168031805,
    0.002927313648193575, -0.1187552139582436, -0.48782254186329055,
    -0.5638321863750504, -0.7049371723856955, -0.04578307900077321,
    0.49572887642641605, 1.2793243232592335, 0.0007698444553332312,
    -1.0809022247360809, -0.9782614268591426, 2.441216856181616,
    -1.5742192933752286, 0.10474779812704657, 0.6811759280298592,
    -0.8173546775655894, 0.688941831807977, -0.5215990980879383,
    0.3846079347304329, -0.28421923628404017, 0.21211949229810861,
    -0.1599333030316602, 0.12163508069999608, -0.09316467469427742,
    0.07177781884036491, -0.055578938642792224, 0.043227895023256115,
    -0.03375855289606463, 0.026463811011765734, -0.020820205680643536,
    0.01643681264141515, -0.013019659797407497, 0.010346416487448091,
    -0.008248107007369434, 0.006595743460752269, -0.0052904671538314026,
    0.004256226409593024, -0.0034343067314751316, 0.0027792243881857633,
    -0.0022556298932160214, 0.001835963498084248, -0.0014986732799921144,
    0.0012268558973329326, -0.0010072161412856525, 0.0008292678383638443,
    -0.0006847181279705603, 0.0005669915476430463, -0.0004708610665717713,
    0.0003921611965808323, -0.00032756429146830335, 0.0002744056405555123,
    -0.00023054635199842104, 0.00019426558644629048, -0.0001641756489442128,
    0.00013915493002405042, -0.00011829482010512426, 0.00010085758994667589,
    -8.624289762956657e-05, 7.396109731055902e-05, -6.361192302410727e-05,
    5.4867429384991716e-05, -4.745831081042885e-05, 4.116290767797412e-05,
    -3.579835378965816e-05, 3.1213433790926005e-05, -2.728280882482569e-05,
    2.3902339183058118e-05, -2.0985288286859604e-05, 1.8459236223596745e-05,
    -1.626356581942005e-05, 1.4347411857118876e-05, -1.2667986114133353e-05,
    1.118920862485074e-05, -9.880589945707949e-06, 8.716321028686918e-06,
    -7.674537247067022e-06, 6.736731677618022e-06, -5.887300268981402e-06,
    5.1132081051238435e-06, -4.403771252723203e-06, 3.7505516230790782e-06,
    -3.1473609977624753e-06, 2.5903624227147574e-06, -2.078239394378961e-06,
    1.6123579385552092e-06, -1.196750315165156e-06, 8.376225992974921e-07,
    -5.420186458200808e-07, 3.15408001696907e-07, -1.5849870094735947e-07,
    6.451760292067035e-08, -1.8937067758737377e-08, 3.0164202265996216e-09,
])

SINCOS_201_COS = np.array([
    0.0004896353480129135, -0.0032447354678906376, 0.01095223845006347,
    -0.025330877509368774, 0.045603964620893764, -0.0687519650189984,
    0.09105517086830994, -0.10955571014254684, 0.12271886285618731,
    -0.13032033375840532, 0.13300188933965829, -0.13178555117707785,
    0.1277541432110398, -0.12185305954486332, 0.11484395399555812,
    -0.1072799439436987, 0.09956098283913649, -0.09193951752698731,
    0.08459073660008856, -0.07760001956068029, 0.07103173358649721,
    -0.06489082118738178, 0.05919601613951247, -0.05391584864305893,
    0.049055780940812956, -0.04456705867667924, 0.040457261282427506,
    -0.036666941211080724, 0.0332136451395899, -0.030027761601860024,
    0.027141909473138912, -0.02447369290302475, 0.022075499247215292,
    -0.01984746857371064, 0.01786726571490979, -0.016011026177709484,
    0.014388810260485966, -0.012844078700958564, 0.01152872414008606,
    -0.010242160186713188, 0.009190668498228019, -0.008114700784787583,
    0.0072916108124280446, -0.006383291929923162, 0.0057602923199031935,
    -0.004980156154751369, 0.004535917742549948, -0.0038467889983387665,
    0.003567037308126065, -0.0029327308045782176, 0.0028105929470807834,
    -0.002194429496142428, 0.0022311101317977, -0.0015941611249750095,
    0.001800027544878686, -0.001098979175570192, 0.001495167224689286,
    -0.0006796654266126944, 0.00130035786297018, -0.00030965377717395037,
    0.0012052335925762474, 3.610642380413747e-05, 0.001205240746684823,
    0.000382389574998212, 0.0013018966393838437, 0.0007550898689832312,
    0.001503358852474221, 0.0011828448709658736, 0.0018253815899842722,
    0.0016989785802421903, 0.0022927582125052783, 0.0023438821839617966,
    0.0029413764369870584, 0.0031679810467363173, 0.0038210431939779545,
    0.004235466871729769, 0.004999262773588755, 0.00562899268760451,
    0.0065661551724297195, 0.007455503886199938, 0.00864063254323648,
    0.009853233974728327, 0.011377691235455435, 0.012999446350215346,
    0.014975945575967134, 0.017117326788278663, 0.019682681677977296,
    0.022477549053870567, 0.0257892773297899, 0.029383250822409085,
    0.0335995533774824, 0.03811165452773534, 0.043330483453611145,
    0.04875129153459426, 0.054854616146235546, 0.060801696080654326,
    0.06709228190080253, 0.07226467230385854, 0.07668442649138033,
    0.07774874094613826, 0.07538095337138068, 0.06503455729363762,
    0.04588172109544484, 0.01074506839602968, -0.041063368584660725,
    -0.117625557506106, -0.2128604228360911, -0.32473691853928877,
    -0.41889667952194926, -0.4578269303114199, -0.35587281978710816,
    -0.0666661112759919, 0.41398275206290663, 0.8253297694506675,
    0.7415593507544138, -0.22362177591765958, -1.2468909757950963,
    -0.5640932415100177, 1.6313369576910255, 0.1369367012055918,
    -1.9009211808491244, 2.1011582166679363, -1.4539662980149537,
    0.810380858527279, -0.4177060435372102, 0.2194140670681112,
    -0.12468136830432722, 0.07826940387187466, -0.05387692262662353,
    0.03987597215593808, -0.03109912184134915, 0.025148873022191463,
    -0.02084675401908038, 0.01757695284278775, -0.014997498936892097,
    0.01290679583568972, -0.011178868977228673, 0.009730506595626182,
    -0.008503878180209718, 0.0074569676118292445, -0.006558094902193065,
    0.005782649589321448, -0.0051110604027691945, 0.004527479560049776,
    -0.004018894830765801, 0.0035745070845087227, -0.003185278766766319,
    0.002843596484678114, -0.0025430124541388067, 0.0022780422183555945,
    -0.0020440036868883257, 0.0018368872847487388, -0.0016532500255010323,
    0.0014901283117434534, -0.0013449656159356862, 0.0012155521334433954,
    -0.0010999741706045096, 0.0009965715234034071, -0.0009039014634179669,
    0.0008207082121414262, -0.0007458969923302608, 0.0006785119139776215,
    -0.0006177170840885938, 0.0005627804356767229, -0.0005130598606698431,
    0.0004679913003904171, -0.00042707850066888483, 0.00038988418417160815,
    -0.0003560224310367784, 0.0003251520920702753, -0.0002969710879615671,
    0.00027121146954596444, -0.00024763512919344816, 0.0002260300694212376,
    -0.00020620715318264257, 0.0001879972722979971, -0.0001712488751398993,
    0.00015582580442025662, -0.0001416054124568633, 0.00012847693068685222,
    -0.00011634006683069419, 0.00010510380008256007, -9.468535339363036e-05,
    8.500933476536504e-05, -7.600704196290336e-05, 6.761591658378837e-05,
    -5.977912242064235e-05, 5.244520878262278e-05, -4.556783338098329e-05,
    3.910572875203344e-05, -3.3023834075077836e-05, 2.729760023490194e-05,
    -2.1922306831363493e-05, 1.6926318238944308e-05, -1.2382788632218085e-05,
    8.410790356377715e-06, -5.154845896652364e-06, 2.7349863491621416e-06,
    -1.1775367755450835e-06, 3.661741517145804e-07, -6.192066664216462e-08,
])

HANKEL_401_BASE = np.array([
    6.82560337633487e-08, 7.375625734276621e-08, 7.96997012172344e-08,
    8.612208106759941e-08, 9.306199062400369e-08, 1.005611335855232e-07,
    1.086645742284082e-07, 1.174210082088922e-07, 1.268830551878997e-07,
    1.371075750361032e-07, 1.48156009519492e-07, 1.600947515187244e-07,
    1.729955440010014e-07, 1.869359111419852e-07, 2.019996241884814e-07,
    2.182772048613791e-07, 2.358664693239236e-07, 2.54873115984164e-07,
    2.75411360663837e-07, 2.976046229505788e-07, 3.215862678579245e-07,
    3.475004072499321e-07, 3.755027658463905e-07, 4.057616170126568e-07,
    4.384587939575313e-07, 4.737907824157171e-07, 5.119699013810637e-07,
    5.532255789859379e-07, 5.978057311938045e-07, 6.459782515899233e-07,
    6.980326212227157e-07, 7.542816481697429e-07, 8.150633472817832e-07,
    8.807429714008947e-07, 9.517152062585649e-07, 1.028406542243639e-06,
    1.111277837292621e-06, 1.200827086303379e-06, 1.297592413714413e-06,
    1.402155307232813e-06, 1.515144112143249e-06, 1.637237807196195e-06,
    1.769170084765623e-06, 1.911733759794935e-06, 2.065785534025608e-06,
    2.232251144137991e-06, 2.412130924740802e-06, 2.606505819638747e-06,
    2.816543877501467e-06, 3.04350727096802e-06, 3.288759881366484e-06,
    3.553775494627146e-06, 3.840146657640719e-06, 4.149594248281688e-06,
    4.483977816605428e-06, 4.845306759362147e-06, 5.235752394978102e-06,
    5.657661011565692e-06, 6.113567966371402e-06, 6.606212921388751e-06,
    7.138556306690845e-06, 7.71379711041513e-06, 8.33539210230476e-06,
    9.007076606325931e-06, 9.732886947188948e-06, 1.05171847056602e-05,
    1.136468292842132e-05, 1.228047444997721e-05, 1.327006249680666e-05,
    1.433939375766396e-05, 1.549489411875887e-05, 1.674350727855744e-05,
    1.809273647424976e-05, 1.955068957062923e-05, 2.112612778233479e-05,
    2.282851832224015e-05, 2.466809129236741e-05, 2.66559011591979e-05,
    2.88038931828008e-05, 3.112497519896879e-05, 3.363309518571897e-05,
    3.634332508027547e-05, 3.927195135021125e-05, 4.243657286301518e-05,
    4.585620664220731e-05, 4.955140214551744e-05, 5.354436475185514e-05,
    5.785908919913498e-05, 6.252150377482026e-05, 6.75596261256616e-05,
    7.300373162293296e-05, 7.88865352949145e-05, 8.524338841989974e-05,
    9.21124909611073e-05, 9.953512112007229e-05, 0.0001075558833879609,
    0.0001162229765854152, 0.000125588483501647, 0.0001357086838732945,
    0.0001466443925838176, 0.0001584613251157513, 0.0001712304924519203,
    0.0001850286277986747, 0.0001999386476954356, 0.0002160501502814794,
    0.0002334599537141681, 0.0002522726779741279, 0.0002726013735535827,
    0.0002945682008058004, 0.0003183051640380327, 0.0003439549047593057,
    0.0003716715588498817, 0.0004016216828033581, 0.0004339852546074165,
    0.0004689567552777785, 0.0005067463375445843, 0.0005475810887141261,
    0.0005917063952947988, 0.0006393874175876612, 0.0006909106831027882,
    0.0007465858083766792, 0.0008067473595375511, 0.0008717568627991351,
    0.0009420049769645596, 0.001017913840995439, 0.001099939610753318,
    0.00118857520015742, 0.001284353243230985, 0.001387849294835929,
    0.001499685289329845, 0.001620533277929307, 0.001751119467238237,
    0.00189222858320994, 0.002044708586766894, 0.002209475769415756,
    0.002387520259478373, 0.00257991197202718, 0.002787807038279695,
    0.00301245475308796, 0.003255205082272187, 0.003517516774912128,
    0.003800966129344984, 0.004107256465546973, 0.004438228360820604,
    0.004795870710296421, 0.005182332678714725, 0.005599936615308509,
    0.006051192009396498, 0.006538810570549064, 0.007065722523947535,
    0.007635094218859962, 0.008250347156047146, 0.008915178548439553,
    0.009633583538639471, 0.01040987920675908, 0.01124873051286366,
    0.01215517832991493, 0.0131346697356714, 0.01419309074557768,
    0.01533680168334325, 0.01657267540176125, 0.01790813858344623,
    0.0193512163696776, 0.02091058058553484, 0.02259560185112186,
    0.02441640589203004, 0.02638393438742415, 0.02851001072140295,
    0.03080741103275108, 0.03328994099003863, 0.03597251875342965,
    0.03887126462173843, 0.04200359790344555, 0.04538834159379689,
    0.04904583548701673, 0.0529980584033558, 0.05726876026546736,
    0.06188360481779279, 0.0668703238465938, 0.07225888382737922,
    0.07808166600115317, 0.0843736609616097, 0.09117267892259785,
    0.09851957692940828, 0.1064585043792528, 0.1150371683263324,
    0.1243071201657794, 0.1343240654192323, 0.1451481984836237,
    0.1568445643547723, 0.1694834494994701, 0.183140804224915,
    0.1978986990836147, 0.2138458180564171, 0.2310779914773302,
    0.2496987719026136, 0.2698200563846869, 0.2915627588902595,
    0.3150575369034133, 0.3404455765799855, 0.3678794411714423,
    0.3975239878166446, 0.4295573582107391, 0.4641720491043618,
    0.5015760690660556, 0.541994188459187, 0.5856692901447937,
    0.6328638290270813, 0.6838614092123558, 0.7389684882589442,
    0.7985162187593771, 0.8628624383213754, 0.9323938199059482,
    1.007528195444534, 1.088717066698399, 1.176448318448691,
    1.271249150321405, 1.373689244865351, 1.484384190920914,
    1.603999182851514, 1.733253017867395, 1.872922415462686,
    2.023846684922348, 2.186932768947246, 2.363160693705795,
    2.553589458062927, 2.759363397376282, 2.981719060101298,
    3.2219926385285, 3.481627998306172, 3.762185354999911,
    4.065350649828702, 4.392945680918757, 4.746939050956379,
    5.12945799702716, 5.542801173730021, 5.989452466383113,
    6.472095917328692, 6.993631855032968, 7.557194322904825,
    8.16616991256765, 8.824218114758272, 9.53529331014676,
    10.30366853222556, 11.13396114506531, 12.03116059024153,
    13.00065836967064, 14.04828044452976, 15.18032224495389,
    16.40358650089262, 17.72542412146164, 19.15377836844383,
    20.69723258938951, 22.36506179715657, 24.16728840584508,
    26.11474245805797, 28.21912670540861, 30.49308693336139,
    32.95028795300461, 35.6054957164101, 38.47466604903214,
    41.5750405323607, 44.92525011301342, 48.54542706087923,
    52.45732594909905, 56.68445438288377, 61.25221426275198,
    66.18805443107456, 71.5216356192192, 77.28500868650357,
    83.5128072220412, 90.24245566687466, 97.51439420705401,
    105.3723217891024, 113.8634587182101, 123.0388304171765,
    132.9535740512827, 143.6672698616796, 155.2442991983601,
    167.7542314042285, 181.2722418751512, 195.8795638082189,
    211.663976352894, 228.7203320984661, 247.1511270676237,
    267.0671166413821, 288.5879811166153, 311.8430448957007,
    336.9720536300714, 364.126013987728, 393.4681010910957,
    425.1746390782468, 459.4361606799342, 496.4585521797127,
    536.4642906374987, 579.6937808113659, 626.4067998114887,
    676.884058167521, 731.4288866902692, 790.3690592644506,
    854.0587625261516, 922.8807242613036, 997.2485133152526,
    1077.609024834175, 1164.445165772805, 1258.278756806354,
    1359.673668084992, 1469.239207674401, 1587.633783044448,
    1715.568857608799, 1853.813226091298, 2003.197634410938,
    2164.619771847478, 2339.049665486888, 2527.535509363266,
    2731.209963326043, 2951.296959483918, 3189.119057127294,
    3446.105390326745, 3723.800255966753, 4023.872393822313,
    4348.125014444879, 4698.506635117757, 5077.122788996905,
    5486.248677800499, 5928.342844080489, 6406.061945236226,
    6922.276718051178, 7480.089229687659, 8082.851518805124,
    8734.185738821492, 9438.00592436345, 10198.54151170577,
    11020.36275454031, 11908.40818780434, 12868.01430460541,
    13904.94762457918, 15025.43934638713, 16236.2227925897,
    17544.57387191111, 18958.35480204384, 20486.061355734,
    22136.87391406209, 23920.71263371084, 25848.29705973495,
    27931.21054206043, 30181.96984280969, 32614.10035274024,
    35242.21736879158, 38082.11392115859, 41150.85567766677,
    44466.88349575319, 48050.12423831561, 51922.11051935027,
    56106.11009895962, 60627.26570529947, 65512.74612369082,
    70791.90946082873, 76496.47956518646, 82660.73666376984,
    89321.72336080558, 96519.46723626507, 104297.2213818742,
    112701.7243200503, 121783.480867689, 131597.0656325818,
    142201.4509662509, 153660.3613439579, 166042.6563014429,
    179422.7442295626, 193881.0295134221, 209504.3957029773,
    226386.7276186048, 244629.4755291, 264342.2647924012,
    285643.5546225249, 308661.3499414067, 333533.9705933576,
    360410.8825445382, 389453.5960623372, 420836.6362720539,
    454748.5919232073, 491393.2486677662, 530990.8136604783,
    573779.2388402272, 620015.6508443463, 669977.89614863,
    723966.2107181761, 782305.0242024113, 845344.9095161883,
    913464.6895224825, 987073.71347627, 1066614.316909347,
    1152564.479738165, 1245440.698567906, 1345801.090453257,
    1454248.746767143, 1571435.357331702, 1698065.126589807,
    1834899.005350438, 1982759.263537569,
])

HANKEL_401_J0 = np.array([
    0.0, 0.0, 9.824913062932289e-08,
    0.0, 0.0, 0.0,
    0.0, 0.0, 0.0,
    1.587400592121677e-08, 0.0, 0.0,
    0.0, 8.566005894708157e-08, 0.0,
    0.0, 0.0, 4.185852284487868e-08,
    0.0, 6.042919228414e-08, 0.0,
    0.0, 9.22377863304008e-08, 0.0,
    0.0, 9.605835817155985e-08, 0.0,
    7.11923373610877e-08, 0.0, 1.084534194934211e-07,
    2.978122322309773e-08, 0.0, 2.229467165084615e-07,
    -1.762389145190478e-07, 3.656694527170595e-07, -2.190824497653861e-07,
    3.591123314594687e-07, -1.330459122900614e-07, 2.693078682355359e-07,
    0.0, 1.681753537860265e-07, 1.292951481169703e-07,
    8.732830659371336e-08, 2.394635732137388e-07, 3.263161048145093e-08,
    3.320472817306875e-07, 0.0, 4.140474794253468e-07,
    -1.691089584764466e-08, 4.929867154878337e-07, -2.35148606990331e-08,
    5.748749293789135e-07, -2.296118919509815e-08, 6.634488608548862e-07,
    -1.578522272463715e-08, 7.602932506949016e-07, -3.95029138669167e-10,
    8.65756159758732e-07, 2.577126803166016e-08, 9.80333905196146e-07,
    6.493462588145047e-08, 1.105842139938396e-06, 1.182703157662404e-07,
    1.245710190589679e-06, 1.861786291659876e-07, 1.40445776042036e-06,
    2.690715579072592e-07, 1.587041404534934e-06, 3.680016417418645e-07,
    1.798553595216537e-06, 4.849140624691158e-07, 2.044272068810943e-06,
    6.226640605691353e-07, 2.329872825482119e-06, 7.849774436589454e-07,
    2.661676063084173e-06, 9.764401550293115e-07, 3.046886487275798e-06,
    1.202531755803571e-06, 3.493832828910101e-06, 1.469704682136747e-06,
    4.012202093180585e-06, 1.785529348521925e-06, 4.61326089332624e-06,
    2.158900926480479e-06, 5.310102517657744e-06, 2.600268757751806e-06,
    6.117954165362566e-06, 3.121898205359148e-06, 7.054521021164678e-06,
    3.738203205552756e-06, 8.14036643611916e-06, 4.466138097026229e-06,
    9.399370737137856e-06, 5.32563208719522e-06, 1.085928513468306e-05,
    6.340092174159829e-06, 1.25523671327314e-05, 7.53701308442962e-06,
    1.451609696381449e-05, 8.948708367122905e-06, 1.679400873721405e-05,
    1.061315399682074e-05, 1.943668323451985e-05, 1.257494571773497e-05,
    2.250293226239968e-05, 1.488640124393654e-05, 2.606118359025671e-05,
    1.760885939507792e-05, 3.019107498684298e-05, 2.081422548042667e-05,
    3.498528720118145e-05, 2.458680024846277e-05, 4.055166655188445e-05,
    2.9025422143836e-05, 4.701571256263205e-05, 3.424594329627977e-05,
    5.45235154227284e-05, 4.038409635240394e-05, 6.32451905787324e-05,
    4.759885125947362e-05, 7.337888648387832e-05, 5.607631517546404e-05,
    8.515549372910889e-05, 6.603428945751648e-05, 9.884406328190645e-05,
    7.772775341712903e-05, 0.0001147579427511257, 9.145538883362232e-05,
    0.0001332619721204058, 0.000107567004767799, 0.0001547811559467743,
    0.0001264719996713977, 0.0001798108274980929, 0.0001486493783884393,
    0.0002089282897741272, 0.0001746596606473501, 0.0002428062685411137,
    0.0002051588438598003, 0.0002822286254590445, 0.0002409146476076457,
    0.0003281087927133202, 0.0002828254175118406, 0.0003815112277320206,
    0.0003319424735329088, 0.0004436760084416005, 0.0003894966102002753,
    0.0005160474740163103, 0.0004569285549031484, 0.0006003086167616667,
    0.0005359233992792353, 0.00069842203047539, 0.0006284506339729007,
    0.0008126770850250102, 0.0007368119832657103, 0.000945743701969087,
    0.0008636982308314989, 0.001100734372093935, 0.001012255913625649,
    0.001281276054621223, 0.001186165424832822, 0.00149159363300782,
    0.001389731874050673, 0.001736607751791357, 0.001627989098002781,
    0.002022051249754969, 0.001906816944033515, 0.002354607536102306,
    0.002233075556223528, 0.002742069502777252, 0.002614764820469374,
    0.003193516622456554, 0.0030612144332367, 0.003719512717457636,
    0.003583305236990679, 0.004332330454742194, 0.004193717895916075,
    0.005046212230367296, 0.004907200820233952, 0.005877674969863473,
    0.005740851469703553, 0.006845854941792223, 0.006714414341214463,
    0.007972865827753512, 0.007850607650897248, 0.009284131207419897,
    0.009175463215382743, 0.01080866736231174, 0.01071861578305127,
    0.01257928364139867, 0.01251344881977102, 0.01463261489338917,
    0.01459697067058206, 0.01700882559413141, 0.01700922269488248,
    0.01975072507757058, 0.01979189868224237, 0.02290187743495209,
    0.02298566772167304, 0.02650305108874451, 0.0266254045959826,
    0.03058599251785477, 0.03073210898400032, 0.03516298150334437,
    0.03529966137617352, 0.04020993030999442, 0.04027366645135865,
    0.04563986763942291, 0.04551858910431959, 0.05126253569381094,
    0.05076838045690198, 0.05672499952578218, 0.05555543753580153,
    0.06142864225226326, 0.05911480957167643, 0.06442218515556448,
    0.06026861996000471, 0.06428390136013452, 0.05731690882023245,
    0.05903878467303038, 0.04800846542566535, 0.04622345209535847,
    0.02975631767989811, 0.02332973372901844, 0.0004075631045367046,
    -0.01097998927420109, -0.03996770310336364, -0.05439690105073641,
    -0.08586172077870871, -0.09710630904000793, -0.1221886100159675,
    -0.1181757180654116, -0.1226608581391981, -0.0881922332076597,
    -0.05976246996708556, 0.01003867346106077, 0.06143837055743897,
    0.1358126160861001, 0.1546019688831242, 0.1597454471983037,
    0.07378168765574926, -0.02155543820940989, -0.1576840287359735,
    -0.1867618104598368, -0.1378646829885588, 0.06349123295842654,
    0.1950187860384398, 0.1936424769502024, -0.07533434525407418,
    -0.231881395360198, -0.1072893080046963, 0.2602429230035626,
    0.1145512544892857, -0.2400299276793784, -0.08781414190173367,
    0.3482215332524013, -0.2648837943057846, 0.01177899549516786,
    0.1809751035116563, -0.2458202901044509, 0.2258610969476037,
    -0.1773155121294782, 0.1311747401438518, -0.09665134793648206,
    0.07308596000248034, -0.05738192263561636, 0.04678168146095997,
    -0.03939779158727641, 0.03405264070131274, -0.03003070542957877,
    0.02689468371509007, -0.0243714805902367, 0.0222857123086269,
    -0.02052141594646854, 0.01899976167605663, -0.01766579040557837,
    0.01648030895118207, -0.01541479785692305, 0.01444812372540324,
    -0.01356436078983561, 0.01275131275416127, -0.01199948916264833,
    0.01130138518277636, -0.01065096922990164, 0.01004331590462835,
    -0.009474341780324707, 0.008940614242462378, -0.00843921203953042,
    0.00796762210990987, -0.007523661440170574, 0.007105415845769664,
    -0.00671119018473605, 0.006339466716099865, -0.005988869875713372,
    0.005658136700741345, -0.005346092874868108, 0.005051634994011519,
    -0.004773719694137324, 0.004511359360882715, -0.004263622706076311,
    0.0040296375170141, -0.003808592909460376, 0.003599739234584605,
    -0.00340238489021329, 0.003215890296536024, -0.003039660023908146,
    0.002873134442084575, -0.002715782351627641, 0.002567095892455205,
    -0.002426588488831973, 0.002293795626711503, -0.002168277194783892,
    0.002049619594802782, -0.001937436245806754, 0.00183136619638034,
    -0.001731071555824182, 0.001636234772852003, -0.001546556467549061,
    0.001461754019926524, -0.001381560792781408, 0.00130572573855114,
    -0.001234013089394381, 0.001166201823788569, -0.00110208468732593,
    0.001041466730622445, -0.0009841635538957642, 0.0009299996161562829,
    -0.0008788069763395656, 0.0008304246517808708, -0.000784698503718329,
    0.0007414813684955915, -0.0007006331617591514, 0.0006620208464608574,
    -0.0006255183200732592, 0.0005910063209799918, -0.0005583723812133077,
    0.0005275107580030028, -0.0004983222495996592, 0.0004707138540343669,
    -0.0004445983047168279, 0.0004198935530394733, -0.0003965222590204658,
    0.0003744113329795447, -0.0003534915670228068, 0.000333697387757839,
    -0.0003149667279395557, 0.0002972409648555553, -0.0002804648423393001,
    0.0002645863035783382, -0.0002495562056240159, 0.0002353279391742063,
    -0.0002218570165506096, 0.0002091007054227963, -0.0001970177752442844,
    0.0001855683950070826, -0.000174714183750583, 0.0001644183743725741,
    -0.0001546460137084759, 0.0001453641062486393, -0.0001365416355278548,
    0.0001281494594613588, -0.0001201601331637577, 0.0001125477274134751,
    -0.000105287687888175, 9.835675748306749e-05, -9.173298412621861e-05,
    8.539584183369774e-05, -7.932647157887555e-05, 7.350799507002284e-05,
    -6.792579804522193e-05, 6.256766460994959e-05, -5.74236988528432e-05,
    5.248607676312167e-05, -4.774876610278635e-05, 4.320737034558452e-05,
    -3.885918466176108e-05, 3.470344555454732e-05, -3.07416769609353e-05,
    2.697802016509551e-05, -2.341946443717172e-05, 2.007591620962982e-05,
    -1.696002345446848e-05, 1.408663272782194e-05, -1.147175200077509e-05,
    9.130950853154427e-06, -7.077245367140833e-06, 5.318671603956403e-06,
    -3.855913768030704e-06, 2.680452779662483e-06, -1.773679649172923e-06,
    1.107284379526082e-06, -6.450375038180866e-07, 3.458519700889004e-07,
    -1.67737025025962e-07, 7.195813987460663e-08, -2.650936383269536e-08,
    8.053026529021296e-09, -1.901548822685746e-09, 3.176144531356312e-10,
    -3.147399480514734e-11, 1.181734681811153e-12,
])

HANKEL_401_J1 = np.array([
    0.0, 0.0, 0.0,
    -1.761153377678605e-10, 0.0, 0.0,
    0.0, 0.0, 0.0,
    0.0, 3.440216255617151e-10, 0.0,
    0.0, 0.0, -5.012130889133619e-10,
    0.0, 0.0, 5.096249946359556e-10,
    0.0, 0.0, -5.137927435894773e-10,
    0.0, 4.90125202447279e-10, 0.0,
    -3.412499448385044e-10, 0.0, 2.331695173457025e-10,
    0.0, -2.490134046395816e-10, 1.954047749927753e-10,
    0.0, -8.103005437723991e-11, 0.0,
    1.279088845538237e-10, -1.851480627564174e-10, 1.332990147779435e-10,
    0.0, -1.62496359244807e-10, 3.09824171170041e-10,
    -4.149316491270542e-10, 4.685626300171698e-10, -4.712327624043219e-10,
    4.305062986549322e-10, -3.542442130313303e-10, 2.522911525991727e-10,
    -1.313966839434664e-10, 0.0, 1.374783013515889e-10,
    -2.736921677833286e-10, 4.061582817302266e-10, -5.279722941941932e-10,
    6.386355968571155e-10, -7.315427954629247e-10, 8.087932062353638e-10,
    -8.640922282673907e-10, 9.028429079409167e-10, -9.186974584267662e-10,
    9.208119531836431e-10, -9.017596435374981e-10, 8.746151932449153e-10,
    -8.291880695503223e-10, 7.826366656707373e-10, -7.199240415978938e-10,
    6.630127031117425e-10, -5.898849811863955e-10, 5.290634200040055e-10,
    -4.493240826470479e-10, 3.886261259968761e-10, -3.037437366057724e-10,
    2.460094930171363e-10, -1.562353890563393e-10, 1.04259524429713e-10,
    -9.277742086714826e-12, -3.359801793948191e-11, 1.346759112142224e-10,
    -1.644581113778544e-10, 2.73561597018579e-10, -2.856750577185324e-10,
    4.064174138388151e-10, -3.95662626099024e-10, 5.339967379460912e-10,
    -4.942289770979441e-10, 6.590721699414525e-10, -5.825238873978475e-10,
    7.864186241426929e-10, -6.626363292105279e-10, 9.225771435176782e-10,
    -7.369977848939469e-10, 1.075704953982971e-09, -8.079491312165849e-10,
    1.255853770105183e-09, -8.775982413533787e-10, 1.475677833588153e-09,
    -9.478165158795805e-10, 1.751454564451092e-09, -1.020150878388706e-09,
    2.104270247990516e-09, -1.095430340362651e-09, 2.561356147221457e-09,
    -1.172968828002544e-09, 3.157686036019299e-09, -1.249340900707534e-09,
    3.938151654389299e-09, -1.316804538118081e-09, 4.960584143866221e-09,
    -1.361050365193285e-09, 6.299594474808514e-09, -1.357732636276717e-09,
    8.051372567815041e-09, -1.267357938643338e-09, 1.034000380570114e-08,
    -1.028333203364199e-09, 1.332639788605693e-08, -5.481128505786461e-10,
    1.722132657425943e-08, 3.079572462647345e-10, 2.230389235352557e-08,
    1.731612035551629e-09, 2.894640331467214e-08, 3.99287625310622e-09,
    3.764713519770196e-08, 7.470342606008511e-09, 4.907355253852564e-08,
    1.269390990642245e-08, 6.411984689966026e-08, 2.040424455749986e-08,
    8.398456134765634e-08, 3.163423793932673e-08, 1.102763405195791e-07,
    4.782016944498328e-08, 1.451576997806275e-07, 7.09539672644977e-08,
    1.915405053682995e-07, 1.037907010433357e-07, 2.5335304249091e-07,
    1.501316966404849e-07, 3.359015461416407e-07, 2.152163676698347e-07,
    4.463548364795692e-07, 3.062649070955455e-07, 5.943990986479385e-07,
    4.332201278554725e-07, 7.931323845043337e-07, 6.097551748617194e-07,
    1.060288415924516e-06, 8.546425300312143e-07, 1.419911983644722e-06,
    1.193611725125921e-06, 1.904650353313021e-06, 1.661883236417129e-06,
    2.558861699766762e-06, 2.307654632812588e-06, 3.442811157821135e-06,
    3.196895656510743e-06, 4.638358992076794e-06, 4.419902312928682e-06,
    6.256715142637839e-06, 6.100218940817017e-06, 8.449032402277294e-06,
    8.406776377975507e-06, 1.142087099410692e-05, 1.157042201253195e-05,
    1.545191683298927e-05, 1.590647868284089e-05, 2.092279678518197e-05,
    2.184558773386808e-05, 2.835151124366015e-05, 2.997585693259872e-05,
    3.844299184771377e-05, 4.110034139799833e-05, 5.215663114685968e-05,
    5.631528820209043e-05, 7.079837414439344e-05, 7.711659421807641e-05,
    9.614618225427727e-05, 0.0001055447661767286, 0.0001306206751127902,
    0.0001443823581310115, 0.0001775170452103382, 0.0001974225796898412,
    0.0002413201291349723, 0.0002698342899158978, 0.0003281318482161766,
    0.000368657535251824, 0.000446249890271919, 0.000503475055177709,
    0.0006069499176331384, 0.0006873187128242988, 0.0008255410973454176,
    0.0009378875323431232, 0.00112278410406726, 0.001279178262961256,
    0.001526781204453462, 0.00174365585973825, 0.002075473273444583,
    0.0023751109602837, 0.002819903510936917, 0.003232361399449634,
    0.003828410021593598, 0.004393943043291972, 0.005191863182780206,
    0.005963857250198409, 0.007029925656135096, 0.008078221794986575,
    0.00949798335655886, 0.01091218414985025, 0.01279369144280816,
    0.01468546702846075, 0.01716070017133079, 0.01966301954392782,
    0.02288457156694697, 0.0261438191445483, 0.03027139461924632,
    0.03442503605732608, 0.03959217858802792, 0.04471956265829849,
    0.05096501947760914, 0.05699213341078931, 0.06413328819589428,
    0.07066611680136001, 0.07808858155732867, 0.08415253392588408,
    0.09050430770970036, 0.09420119432022898, 0.09704525747507635,
    0.09525207334318243, 0.09091107970583592, 0.07941214687854993,
    0.06360896948482617, 0.03851999787085855, 0.008930119389229475,
    -0.02931232114631221, -0.06745472857764939, -0.1071387129122266,
    -0.1337787672525563, -0.1467487065654186, -0.1280178925639679,
    -0.08266114319901335, -0.001829018947010989, 0.08538653035086596,
    0.1634948424549636, 0.1768283682900049, 0.1165478617534897,
    -0.02909864536607605, -0.1650763395456089, -0.210818942906725,
    -0.06548403763878953, 0.1474231756411919, 0.2387075880611132,
    0.008364392500807047, -0.2375301184090862, -0.1324045834042435,
    0.2623684401711879, 0.09558257428232823, -0.2795911533969242,
    0.04155824322494574, 0.2715606356255319, -0.374252032398344,
    0.2853293391721109, -0.1417457299548064, 0.03117732200130105,
    0.02889458199693983, -0.05278084724642508, 0.05771601780075224,
    -0.05477531833561626, 0.0493954606079792, -0.04378947822887341,
    0.03869238569366965, -0.03425716943762586, 0.03044093551672354,
    -0.02715226194815648, 0.02430080341386173, -0.02181052920166688,
    0.01962073026812987, -0.01768361271316385, 0.01596144663779621,
    -0.01442412760579961, 0.01304729403368628, -0.01181093160074335,
    0.01069835428430446, -0.009695462302234538, 0.008790199228345667,
    -0.007972150985921739, 0.007232245468946166, -0.006562523603657329,
    0.005955961653845067, -0.005406331000039078, 0.004908085823543291,
    -0.004456271717308975, 0.004046450048794231, -0.0036746344447575,
    0.003337237040467819, -0.003031022902436713, 0.002753071298464685,
    -0.00250074253647793, 0.002271649199484839, -0.002063630842184971,
    0.001874731507609227, -0.00170317966496916, 0.001547370305159833,
    -0.001405848965175527, 0.001277297436350464, -0.00116052089710017,
    0.00105443623296827, -0.0009580613717996333, 0.0008705055444165467,
    -0.0007909604401097324, 0.0007186922398324291, -0.0006530344915884751,
    0.0005933817682686722, -0.0005391840290971849, 0.0004899415886335732,
    -0.0004452005847911536, 0.0004045488440443307, -0.000367612074967828,
    0.0003340503647933679, -0.0003035549812866991, 0.0002758454813737592,
    -0.0002506671088369273, 0.0002277884460323346, -0.000206999281045724,
    0.000188108660688553, -0.0001709431124465889, 0.0001553450267830473,
    -0.000141171192459281, 0.000128291474761333, -0.0001165876238497402,
    0.0001059521991589964, -9.628759515338238e-05, 8.750515384295626e-05,
    -7.952435126636077e-05, 7.227204913633232e-05, -6.568180805443277e-05,
    5.969326263717584e-05, -5.425155895475095e-05, 4.930685077009869e-05,
    -4.481384639404849e-05, 4.073139627769274e-05, -3.70221135078609e-05,
    3.365202295484529e-05, -3.059023779502484e-05, 2.78086641009289e-05,
    -2.528173545505838e-05, 2.298617982129317e-05, -2.090081950209839e-05,
    1.900640153317426e-05, -1.728545097076178e-05, 1.572213560023288e-05,
    -1.430213090870262e-05, 1.301247986370528e-05, -1.184145017024185e-05,
    1.077839734116676e-05, -9.813642618247219e-06, 8.938371729153144e-06,
    -8.144555804633981e-06, 7.424890780058305e-06, -6.772748023670692e-06,
    6.182129388552279e-06, -5.647624656180153e-06, 5.164374046764935e-06,
    -4.728037195336446e-06, 4.334761689817321e-06, -3.981136442356169e-06,
    3.664118637205433e-06, -3.380939384592361e-06, 3.129009529723152e-06,
    -2.905847492954934e-06, 2.709034327844308e-06, -2.536183084429876e-06,
    2.384905895111026e-06, -2.252772087223033e-06, 2.137259365710216e-06,
    -2.035698487395405e-06, 1.945208220753021e-06, -1.862627051737732e-06,
    1.78447281492238e-06, -1.706983978589542e-06, 1.626297101583022e-06,
    -1.538789746921996e-06, 1.441575114294373e-06, -1.33307713985585e-06,
    1.213536734497111e-06, -1.085223736705093e-06, 9.521451230126823e-07,
    -8.192296419664399e-07, 6.912547372495382e-07, -5.719422069867315e-07,
    4.635461014353267e-07, -3.669835113430816e-07, 2.823229600705464e-07,
    -2.093541854410099e-07, 1.479865821668501e-07, -9.831343971854163e-08,
    6.033173947686275e-08, -3.349527235750482e-08, 1.640107598073682e-08,
    -6.856420858188184e-09, 2.340536901536035e-09, -6.097093750212437e-10,
    1.074334228952679e-10, -9.576603341064843e-12,
])
