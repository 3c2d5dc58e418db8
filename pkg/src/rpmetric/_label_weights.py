"""Fixed master sequence of 1000 standard-normal values used as label
weights for synthetic ellipsoid datasets.

Generated once with numpy.random.default_rng(1000003).standard_normal(1000)
and frozen here verbatim so that label assignments are reproducible across
machines and numpy versions. Do not regenerate.
"""

LABEL_WEIGHT_MASTER_SEED = 1000003

LABEL_WEIGHTS = (
    -0.15703199162098297, 1.1264007077367122, -0.3925581357149643, 0.9388269695160533,
    -0.5387771910671988, -1.7465107805153517, 2.7221101679319237, -1.058370976138185,
    0.554949286852916, -0.44329892590152403, 0.3548312399229848, -0.07549019139172201,
    -0.7636307804942382, -0.2702586899325413, -0.0755024425161164, -0.8511191773262887,
    -0.2783900928544842, -1.096772935952371, -0.7133947549858602, 0.6926077328818321,
    -0.4986722818699424, -0.016930248284983348, -0.5992474201131517, -0.43321918424389566,
    0.5992057246986614, -0.15956843828351483, -1.004305884470066, -0.5574206611312309,
    -0.39656595242161313, -0.1664502766075604, -0.9991075361905776, -1.8241662110629193,
    -0.8334790269350164, 0.06340025718046056, 0.2324762792893549, 0.575654892545635,
    -0.04347426238832484, 0.3267749176954214, -0.3671109129966188, -1.0642533997260866,
    0.06597590096688441, -0.46528856395228063, 1.0373079324103867, -1.7369450663938844,
    -0.8667167636826073, -0.6815402234871325, -0.10791893880114854, -0.855667266293632,
    0.9901263992675793, 0.4792074449255859, -1.13820631700769, 1.2007028201710122,
    0.8629248393129684, 0.2905640060327435, -0.6444118932073728, -0.33053026696137583,
    0.7392749254838884, 0.8056475731320525, 0.35967673364436276, 0.4673504876362754,
    0.9164228918675104, -0.025245523303521946, 1.50869243935749, 0.8153633153373996,
    0.7664658385750055, 1.2647219537827847, -0.48500868431903066, -0.2781130256432497,
    1.1933102886509048, 0.166914766645306, -0.4747455510068714, 0.24409517783432297,
    -1.0943840883559133, -2.2512942730164966, -0.7921276942846723, -0.09595024399358336,
    0.3716465911814375, 0.7954213275837223, -0.1484992740051918, -1.318162725173043,
    -0.17511295458673046, 0.2450657501195039, 0.029490700836323384, 0.46929618877938273,
    0.1589546682050504, -0.04941231802200046, 0.8168500300396042, -0.3470492883611506,
    0.8164314392120363, 0.6130891315162766, -0.9841614636098365, -1.2790783499954261,
    0.7733776090121367, -0.3687174065822068, -0.6274243970722129, 1.7667929839532923,
    0.17263061837088853, -0.08512598650229708, -2.183520992438345, 0.04303067790734845,
    1.382758680316063, -0.8519385873383107, -0.13608478452046666, 2.0996880992224973,
    2.048476084890087, 1.730564672941453, -1.3916747433085184, 0.34942843689915487,
    0.03748999367486144, 0.5273739966593549, 0.4062485309087149, 1.171355111625634,
    -0.008929805868976412, 0.5912240080863416, 0.42122268049146605, -0.5234875519345685,
    1.0828897752376068, 1.81822018649037, -0.45457058549826607, 0.6127480343907336,
    1.0767740159782195, 0.5280526228137191, -0.39558555197513806, -1.5475520636031805,
    1.6418480294856426, 0.4071431734748841, 1.1213131050398724, 0.8703089786925087,
    0.2955938221645192, -0.8130527901885741, 0.13366299971089357, -1.0017196880440984,
    -0.5237269192852504, 0.14649949788193278, -0.6700512546333567, -0.24751762943907088,
    1.0601253082840902, 0.2515881339122881, 1.2435889803806366, -0.00893627465523161,
    -0.3842236370716008, -1.4889824339408708, 1.1868889826288067, -1.019260312823722,
    -0.44343024836716965, -0.6521988593275778, 0.8419041177887789, -0.05278392714096753,
    0.26387855760779744, 0.30867412806219013, -1.7216604484892526, 2.07592166907718,
    0.3109990510647595, 0.45134128455910816, 1.0765652266044392, 0.6718338921112648,
    0.8076020937086554, 1.218138769452762, 1.9059896471209268, 1.27896744926866,
    0.6329168628009842, 0.120659828197053, 0.23143516274302406, 0.4713890107873921,
    -0.8326114716737631, -2.824232534501261, -1.5596950375508436, 0.10773364285551419,
    2.1967900930898163, -1.0550720916778342, 0.31935269755883755, -0.06959007239948045,
    0.38709931946358234, -1.0196400349151835, 0.6752805833598041, -0.387031193945148,
    0.03865386262612539, 1.6566188556301253, -1.2908869897365556, 0.6865641232523637,
    1.2710844784446234, -1.0104918205421147, 1.9379368712872023, -1.9893763659286863,
    -0.9431659823869839, -1.138463805855419, -0.4112668821838295, -1.9151282416335196,
    -0.14352570830783562, -0.7136813133209227, -1.3887804643700878, 0.6514835209891289,
    0.533734597044424, -1.0588625121613597, 0.025168373365238292, -1.3857868405382263,
    0.41489402932249025, -0.5371880361053533, 0.18819770476694828, -0.10259435565814394,
    -0.6800523734742446, -0.9078720392610029, 1.762452600072826, 1.0574565767661532,
    -0.9370476872980852, 1.6244832398633198, -0.508914456027275, 0.4708139586938813,
    -0.8681189139477148, -0.4930622219232463, 0.47090524696258473, -1.5373091114731763,
    0.42012598268314066, -0.1294848398123164, 1.6615580061271442, 2.053405936962814,
    0.23572424587125043, 1.730952138564753, 1.4668990647903983, -1.652767741548221,
    1.3861946996091772, -0.17277257643052357, 0.16586505915712207, -0.021621781882212403,
    -0.11255463855129486, -0.2253775382885083, 0.27765084387976774, 0.5644959151782842,
    -0.30808720901252074, -0.3103581120930959, 0.6439613625956224, -1.418512323238603,
    0.9124168001036342, -1.56965214532731, -0.36053158858371726, -0.018996457244404727,
    -0.01724362601602917, 0.994066997165516, 0.9966019829527215, 0.534047696912273,
    0.7241171435617884, 1.1898943010376224, -1.4325092061356113, 1.5978122036132887,
    -0.7166191609002548, -0.7111255264507368, 0.6640481801955262, 0.6098285527061912,
    1.2203870704983502, -0.48742868645680043, 1.9069520959935946, 1.514014703779244,
    0.5848709865888512, -0.7919763667263263, -0.3567080161477566, -0.22844462907004606,
    1.430813678213387, -0.5680817809824085, 1.0668707246277664, -1.0678097052305948,
    0.9357175551244773, -0.0597056991527307, 1.9632230145885194, 0.09240734125225883,
    0.6780767834730788, 0.05552431331672048, -0.8949864007315741, 1.008748475431932,
    -0.12604209785881546, -0.8802718632969115, -0.21063265675984943, 1.5746099710690362,
    0.1652903652023038, 0.4293438872329361, -0.5207093351808874, 0.5537876048147149,
    0.6053068980780305, 0.2194155764790174, -0.714260730869001, -0.7909597147298413,
    -0.29245064156613904, 0.19394950729945207, -0.761818433772496, 0.06767849067110025,
    0.09447243652534881, -0.5945754965691649, -2.5920530546303393, 1.12211571602155,
    0.24337035246227218, 0.9831702390688305, -0.8786346642278683, -0.14045948744094128,
    0.02187401465560446, 0.8579478393488381, -0.6570371478927239, 0.4267010058625981,
    -0.32159276644440443, 0.02098502914375011, -0.12936290667856934, -0.733565365580214,
    0.36344030234788977, -0.5966081359185117, 0.22942270807377702, -0.5435633402251012,
    0.08990127826059797, -1.035885434754515, -0.40519721255797925, -0.2279661944752401,
    -1.2318087237664763, -0.8435740300112989, 0.5940558921158668, -0.6611505224511566,
    1.5416140177417448, -0.33678545793065684, 0.7723895719302849, -0.453322392063464,
    -1.2057008352187415, -0.38571552256194525, -0.16009667553810045, 0.39884041010340354,
    0.7688538522465492, -1.1394762185934142, -1.8077327857356371, -0.6459256078389457,
    -1.3960825270182144, -0.6186426720790424, 0.42408605309295067, 0.22396865999174612,
    1.561494462873979, 0.5608289635244225, 0.5876964239370224, -0.6053860631611345,
    -0.6447521805676304, 0.08833920183520486, 0.2094506545469881, -0.4243837057029026,
    1.2020790257870992, 0.9575277522638619, -0.89277645876541, 1.805540310738529,
    -0.6355186018440158, 0.5419571902986208, -0.9034071712380779, 0.5298751021493354,
    0.14346948199242657, 0.29700868351628223, 1.5364545408292927, 1.3616555111266173,
    -0.2088644497680185, 1.396431293821712, 0.6395683176979393, 0.3689459106805696,
    0.5628107327653802, 1.6660446483017715, 1.261520187776127, 0.33889536462862746,
    -0.1088047719297301, 0.6965033946090045, -1.2133280035546654, 1.343671937073392,
    -1.4411953685678724, -0.0473757965000384, 0.25295962621429274, -0.22451715172418507,
    -0.07665380203444547, 0.05059798948927705, 0.6005205443200964, 0.5154337650280245,
    -1.281406221883826, -0.22564086920685508, -0.23796650820847642, -0.1655475754638294,
    -0.8844849820203953, -0.525907740199716, -1.2416444395209048, 1.371701407328937,
    0.3062183183401631, 0.8699047018303451, 0.15513916304910427, -2.387114830279051,
    -0.8002166078590266, -0.34570858169279195, -0.0419168930657383, -0.44103671460252386,
    0.28536145237111993, -0.5020703434041984, 1.05672938048005, -0.12470844541577791,
    -1.0103193644351611, 0.46881720074359384, -0.31312220605370295, 0.41043025598133015,
    -0.4246509861324578, 0.2855106306264389, 1.5302548768212616, 0.3945352666631492,
    -0.24973967005057193, 0.6263959650655025, -0.11934684172467326, -0.3580439822586542,
    0.3468700416669444, -0.8892736459456597, -0.20134493907236903, 0.8820052621681258,
    1.0634798494820354, -0.458455151911173, -0.01633795265169611, 0.6778687885677939,
    0.05323710336122546, -0.3320183473075318, -0.697179779321858, 0.04492345253339889,
    0.7318005891544582, 0.6548948610432614, 0.9816899642462377, 0.929540858183715,
    0.6232588301719274, 1.20716397375419, -0.20691477434159425, -2.4481152620792237,
    0.9382604103015977, 0.8288014638249714, -2.571894216567804, -0.042367725895461436,
    -0.17813282787350274, -0.27545614916956734, -1.18984222300944, -1.5455539689114333,
    0.9772223376747277, 0.926755193777652, 0.48825024049040405, -0.8357098885224463,
    1.5821486491722674, -1.4375689735234802, -0.7994008731022829, 0.18780892933832555,
    0.40092811713103316, -0.7347646828255178, 0.9112354067239268, 0.13529131975194267,
    0.12178308082630052, -0.8433733661127163, 0.12347852421942915, 1.0445216593470295,
    0.15216477882105406, 0.7392567033503316, -0.17644021301119603, -0.5179004496470534,
    -1.0244036614450787, -0.47552708977440805, -0.7675943377564864, -0.7895988893641394,
    1.7785540034056315, -0.4327648880843848, -0.08135060490252569, -0.15530825581325078,
    -0.5792830479703747, -0.9668353837419866, 0.399929393863415, 0.25275801887973676,
    0.5963119028403159, -1.3140329725595992, -1.097061006223824, -0.5082978027580295,
    -0.1684199774904752, -1.9507518436120665, -0.2347744871191606, -0.8654722380625148,
    -0.7489219801189422, -0.6428185298343043, -1.1012770556110147, -0.4537871758374936,
    1.9616659104778265, 1.274278396361002, -0.4109272249997482, 0.3026151981694929,
    0.7943963626046286, 0.4450618665449348, -0.9693369867648838, 1.0394863068576434,
    -0.09763115465786225, 1.0997734395174599, -1.45456847157485, 0.3877073269485587,
    2.0814884874172757, 0.7200874462581809, -0.2654934874488419, 0.7230248384625888,
    1.5197620873009656, -0.39542298375311274, 0.151647236715791, -0.4681877969959339,
    -1.6973142786220021, -0.14551930305507085, -1.2455170591057216, 1.519220492908315,
    1.9551382253757812, -0.500868161266005, 1.0165441848428873, 1.570404880225374,
    0.9403045523956682, -0.9929125571195138, -0.6903988176118744, 0.4158418908019758,
    -0.8721041616005938, -0.8333321652463996, 0.8317806888684204, -0.5847609666849143,
    0.033224603499591644, -1.0057864728111034, 1.677787179647041, 0.9842098476995877,
    -0.8343645041587572, 0.4343098431738545, 0.3666782089382276, -1.0974662935717943,
    0.001634846936950006, 0.17118969571699505, -1.2031587380084914, 0.4565456210570557,
    0.803045927705339, -1.4558774554291516, -0.5083209058521009, 1.0117015365194137,
    2.888425477996217, -1.700395848998086, 0.4028350047004673, -1.2556501662849138,
    -0.8451411203453233, 1.5001553384891744, 0.7852138585130448, -1.020683664216405,
    -1.1305049993256604, 0.505580412636317, 0.732331372670374, -1.1712900274064246,
    -1.015510403172335, -0.8363548457766228, -0.7183760551280122, 0.03833200450292543,
    -0.3039472582814491, -0.6028516038264718, -0.04306957591687787, 2.0211499534997728,
    0.26932672992292517, 0.06987987602259793, -1.0014928773858696, -0.6673289804425173,
    -0.19554193200051173, -2.650350923017156, 1.1030970183444189, -0.16160206663279966,
    -0.43801576711399665, -0.2896748824995499, 0.530135403916529, -0.5117234564115916,
    -1.213693942049903, 0.4712203991610211, 0.21282622635254414, -0.09096959880940611,
    -0.09001467733561028, 0.8848372467770141, -0.22536940471312328, 0.5935972435721303,
    0.6571334102144338, 0.0655241047013342, 0.058828059016246874, 0.3384548443938892,
    0.8318036580364578, 2.1235084375631277, 1.3444637634041368, -0.8534431601561941,
    -2.9207806352787733, 0.5965397636676669, -0.3558755766082842, -0.6544337543859899,
    0.35427678177305566, 0.014372441224701315, 1.4454457268821133, 1.188867637693439,
    -0.32891355491011165, 1.2796364027601057, -0.3855929498318322, 0.2950054245827982,
    -0.1429756393287257, 0.4761796842998266, 0.8196918440769704, 1.106544741765166,
    0.4096021780958666, 1.2635616875426197, 0.8609635129473793, 1.5759914411019535,
    -0.45886414066752584, 1.815925973013087, 1.5355040414723578, 0.6183356002354498,
    1.2213938482407567, -0.30495440772625515, 0.22948088661927826, -0.5219633766892039,
    0.43751492842097345, -0.2456764126303936, -0.04517935910521138, -3.0309736123237445,
    -1.4462958008126967, -0.2869653877190541, 0.05939259347892836, -0.36466799796550264,
    -0.7641937975748799, -0.39117702992413195, 0.6348447553355037, 0.35622977224881996,
    -0.11468490190810104, -0.07475240523780186, 1.1391149600266166, -1.26474062274894,
    -0.07258285982709752, 0.17669541086337656, -0.08003008722870442, -0.17885236984653613,
    0.7942069603287853, -0.8600683606295543, -0.4922090404998947, -0.10632820566322974,
    0.05250253790171394, 0.1458270671158481, -1.0621592901500716, 0.8625352775607131,
    -0.4512761152943553, -0.7471630129313561, 0.3449855421784917, -0.5486768778047925,
    -0.03242441944837031, -0.1543792733313043, 0.4548787827144097, -0.6462920509618709,
    0.7050367402787246, 0.5785472457032464, -0.7808482727087317, 0.2560089715924481,
    -0.6256060789776033, 0.7629483836851968, -0.8820164268930056, 0.07175950211902209,
    -1.1788687302877054, 0.533033494440571, 0.5677046006299795, -1.9055778923099138,
    1.4302491856034898, 1.5847570641792044, -1.6317470730233725, -0.18424674713068914,
    1.021211696573837, -0.03564970545228242, 0.4979786054096915, -0.30199178531855764,
    0.3559878947358692, -0.2414794448334625, 0.19270905614957665, -0.2684670788847387,
    0.0014641733553443254, -0.6203051621318767, -1.4036297073802784, -0.035700251545927486,
    -0.3976625418818322, -1.9098186523216631, -0.5346535858836413, -0.1432427372978211,
    0.5398590002386455, -0.42295477889740585, 0.3083083181144567, -0.5365781529376126,
    0.43904756277620105, 1.1839662254704162, 0.30805677660025726, 0.48352839344162674,
    0.7653106089348913, 1.9085735602806686, -0.21138290404701354, 1.1012545288439175,
    -0.9998524135424861, 1.4858120580230167, 1.4926443558429046, -0.7574900136097945,
    -1.7017981098903643, 0.07684485698786107, -1.2466978623077445, 0.9040394729818035,
    -0.2129118419041812, 0.28700668315981076, -0.03031998421674386, 0.5008167206498063,
    3.2706051740929585, -0.31199615022472993, 0.38406861322162483, -0.35819382561561824,
    1.0263534514458603, -0.8544241653377138, 1.2662842633738265, -1.5495692564416574,
    -1.2916537094615486, -0.8544302999082742, -0.394556370729157, 1.9687063531661946,
    0.9329214717963316, -0.6465719114617826, -0.9696408000462223, 1.9489776019938767,
    0.23919838925370304, -0.8677270688475959, -1.420244101069312, -0.8271850628895658,
    1.0969882404252116, -1.2192878092842143, -0.907208679482582, -0.1480375230983764,
    0.3221594927124455, 0.06109782051414319, 0.026826072625674293, 0.6387373778522467,
    1.163161471249626, 0.875200258750014, -0.2628783559860209, -0.22669398852103623,
    -0.1363532245297416, 0.3285114701390398, 0.11525438225043201, 0.10943136183868832,
    0.05667521667182684, -0.9171861914989363, -0.2161293647442639, -1.0548523479173704,
    0.3011999098530157, 1.078364738457437, -0.3101732245011396, -1.5446145322073372,
    2.177319192816945, -0.28616655796608703, -0.2814706377170262, -1.0480828443201422,
    0.8352572083794808, -2.1530418706562267, 0.2975486623069178, 0.190708634416311,
    0.4368597370300052, 0.6816837315425679, -0.04223098989531234, 0.6870031275490734,
    0.7077686826197979, 1.0589340599160706, -1.3824022153695446, -0.20641535800695027,
    0.07472987741078922, 0.4353171506344073, 0.9517609990877118, -0.5782430748618216,
    1.138784385874312, 1.120235433219878, 0.009720865543578714, 1.1252364613495573,
    -0.5384628239704751, 0.9503958885577162, -1.0051590229843506, 0.18256934679765568,
    0.5444277203334476, 0.6930489670361606, 0.4572447650018732, 0.24084977845537067,
    0.20253671245828872, -0.24450249076082864, -0.4166048588824368, -0.27734785213815827,
    -0.9987720359033044, 0.8614261211329258, 0.3760401635168381, 1.8726424645095294,
    0.6648341244668126, -1.0370023579388754, -0.700517604458469, -1.7804813984781611,
    0.17281694581767557, -1.777062518648317, -1.2455250703276084, 1.2717362906401328,
    -0.02477762967580211, -0.7570191920574474, 0.26947335615064927, 0.8099158950986926,
    -1.2059306545379442, -1.8429706670584536, 0.06131903423677407, -0.6128775668598994,
    0.29652182909297503, -0.4115970566031447, -2.2458404933874676, -2.1369575885929044,
    -0.5349705680894233, 1.2129043307091547, 0.6886185238579112, -0.6055469272155178,
    0.5692411597165911, -1.7939870866274064, -0.8780050668074832, -1.532193507814228,
    -0.0586713568483263, -1.229069909953131, -0.2853007472386507, 0.12581430904056015,
    0.023720503817677603, -0.2380411143842708, 0.13920496731513193, -0.08379906039969641,
    1.7824131864052457, -0.16351949607780986, 0.27058513331977757, -0.059945827399219165,
    -1.1552847184430286, -0.7461284082297821, -1.8184031681524564, -0.3999361225421219,
    -1.6414947138356626, -0.27101950088630017, -1.3922252417923449, -0.534330174741432,
    -0.3020541401346156, 1.24682346693601, -0.4030983111549365, 0.9357406820030134,
    1.1009116047389957, -0.9556101804829038, -0.445542991417746, 0.02179445396907698,
    -0.47974350400922555, -1.87937940171439, 1.5299777615147834, 1.1181392595969941,
    -1.604390719356209, -0.658303989582839, 0.30078130682017395, -0.3625996276136915,
    -1.7006605677153501, -1.4393400929444786, 1.9214708456097287, 0.35869301136493226,
    -1.863559021667726, 0.6126924142480452, 0.9128429326554361, 0.4261465101184203,
    0.7422998942692971, -0.006401234028123069, 0.8002741870943392, -0.9814252434152021,
    0.898441051249719, -0.13671826012923263, -0.35314431063371815, -1.6404939388754411,
    0.17112374392625984, -0.9894628609496547, 0.24725368870026349, 0.03855561819425904,
    -0.2581087642262689, 2.450213859318627, -0.6882306681833329, -0.35888504848115677,
    -1.0106216893709812, -0.9662210651056685, 0.8221763705792946, 0.4722985732249742,
    1.485591952099204, -0.21578471183589004, -0.18262298654971199, 1.0737280619800884,
    -0.6028066291550058, 0.8500061694399936, -0.03011635092341545, -1.0962172958026455,
    -0.171757766009197, -0.7653843668461264, 0.25075915361328, -2.2346180635693855,
    -0.0686872141319591, 0.22029056474636752, -3.4563047396287128, -1.1790278626619124,
    1.1699797207123188, 1.2056763079257429, 0.8899120057072668, -1.5275306558540405,
    0.15564848297378583, -1.5472326468261623, 0.3251493556861465, 1.9523848867103855,
    0.31545691488689076, 0.22650887628311828, 1.5266983761728874, -0.6036788044484136,
    0.6564823100152595, -0.2842097023348274, -0.9935563455128674, 0.035095360967784595,
    -1.1260476264375734, 1.5876760741669926, 0.6249436324278099, 0.3791428950315027,
    -0.36730140420582824, -1.2113431613054046, 0.8064359821504485, -0.7745502040895594,
    0.1487195543588923, 0.5531842490191989, 0.7184967151623806, 0.6540390579898275,
    1.673009099905561, 0.27430560396708137, 0.3228832477828388, -1.0602835617328876,
    0.5808239307540048, 0.32097977128621136, -1.0254556836357178, 0.28304949474912094,
    -0.22245504201445643, 0.14773641005634167, -0.023560245280805366, -1.0176524803396472,
    2.4932801704055834, 1.2944464312374242, 1.799264184807126, 1.3821801402916605,
    0.32215915563208514, 1.2381935506513335, 0.299878689928589, 0.22931776713842073,
    0.3745646013842817, 0.11202138253541762, 0.712589171311494, -1.194454223648491,
    0.7399344329897204, 0.8505517545531204, -0.4179478250319226, 2.0428560943117455,
    -0.6363535451351781, 0.7754653088701989, 1.525839333042202, 0.13289372918157255,
    1.396209549657272, 0.4269447864353603, -2.0874364055971117, -0.08950141646223116,
    0.6415587760227519, 0.41624367849356375, -2.0439766974434814, 2.778951449974952,
    0.5142951214663242, -0.4423444337368093, -1.0051762413893954, -1.8311831484565848,
    -0.12664831951970754, 0.6377108176438802, -0.11468372172697483, -1.6050358709333827,
    0.10730318601154054, 1.438502118085008, -0.9944652886142258, 0.7845247194759657,
    1.1249882560929125, -1.4026630821481318, 0.7998856235225457, -1.406932442624655,
    0.8822318774751806, 0.5723418178316674, -1.4391400622571942, 0.14230507534174933,
    -1.0203952817493305, -0.08393498699111317, -0.7042750406691233, 0.16413763931319697,
    0.7503940090280774, 1.114378317756937, 1.4784579051277036, 1.2407329672805902,
    -0.8643369858138896, -0.06939335922967742, 1.594345661656259, 0.520177948915856,
    0.13033059203717426, -1.8985973668468865, -0.19886931738019695, 0.33442993296454815,
    -1.1455972236605831, -0.8320530850569673, -0.8598481437842783, -1.228642019138621,
    1.491699675406015, 0.03906205117890347, 1.7694680006677574, -0.12457531492476782,
    0.794601756961562, -0.1655559481887118, -0.7786456837116036, -2.11612629645592,
)
