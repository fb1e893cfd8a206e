//! `Pr(g ≤ 0)` for `g ~ N(mu, sigma²)`, evaluated with mpmath at 40 digits.

pub const PF_TABLE: [(f64, f64, f64); 200] = [
    (13.115082789113124, 5.61129798287784, 0.009712739764971515),
    (-1.7958024818066782, 2.9716262301506293, 0.7271833493700718),
    (-6.516190007547067, 7.078018710979967, 0.821376472710106),
    (9.0711007787047, 5.268374502912615, 0.04255264410528874),
    (0.6032769783042351, 0.5401727492433726, 0.13203515359896312),
    (4.536061847621438, 8.118076623927097, 0.2881625373332502),
    (2.552231214145216, 7.658230200237338, 0.36946658002573396),
    (2.8634891891602354, 0.6239723093181265, 2.22550051279453e-06),
    (-9.935453572229981, 8.92702424928983, 0.8671379811923553),
    (-0.5580758515094644, 5.6382689009923395, 0.5394229247951202),
    (-11.220575814300755, 9.52548614337453, 0.8805923454737936),
    (-2.112016310341664, 1.2138703398889334, 0.9590619498034121),
    (2.733659806943166, 3.4789276141161807, 0.21599919776906457),
    (0.017125547519661666, 2.3224392002241583, 0.49705824675006555),
    (4.10645038310709, 4.754576725962554, 0.19388083717836505),
    (1.1193972095169809, 3.1436730993578825, 0.3608905545248505),
    (5.1816065829198195, 7.644306002288764, 0.24893697943178844),
    (-4.9598963899818305, 8.571637858666483, 0.7185840975511841),
    (0.7867025061340644, 7.867816271301676, 0.4601761545925916),
    (7.76159506939581, 7.608510850049428, 0.15383574570787514),
    (-17.220579416687087, 4.748535573077567, 0.999856357365549),
    (-7.264325788329664, 1.2281284539355988, 0.9999999983401786),
    (5.247254119129163, 6.309691399749915, 0.2028122467012226),
    (2.5753200218878742, 4.653906838546382, 0.290005951031062),
    (1.9570345588588545, 6.277472524692383, 0.377613295443987),
    (7.662558714472468, 3.2414367558883206, 0.009040895146055907),
    (-8.171141244593267, 0.6388551352793618, 1.0),
    (9.346979835425778, 0.6639603540678051, 2.6069080068264895e-45),
    (4.293544990916418, 6.925913472241165, 0.2676536740227634),
    (5.918884566829954, 1.287405336612207, 2.13764613927521e-06),
    (-25.221813136467873, 1.1638136738031064, 1.0),
    (2.3274913800477375, 3.177666425322965, 0.23194605277088096),
    (-1.1949707473592461, 1.262239005241734, 0.8281059983064577),
    (4.703188363216469, 5.976464411501076, 0.21565509332696284),
    (2.174127001801498, 2.0871973759565705, 0.1487872274272489),
    (-0.5279009171443398, 6.48732568387758, 0.5324278155076251),
    (-9.490024231302474, 4.891827571723007, 0.9738086487860326),
    (-8.722242803235218, 7.897910955246361, 0.8652844034690226),
    (-9.19410993354537, 9.052905607141048, 0.8450894949917441),
    (3.6052933317941758, 3.1042969149442423, 0.12274206382154518),
    (33.24831550375349, 9.97767436266203, 0.00043070156200600095),
    (-0.43970573821537506, 9.309447010425671, 0.5188359210844457),
    (-1.9325580591098674, 9.716126578510991, 0.5788303397837881),
    (2.9224776519264957, 3.132620865827195, 0.17543121501950654),
    (4.940345018500738, 8.48199626218407, 0.28013155561252395),
    (-5.12356755061883, 8.421194772871582, 0.7285433292388196),
    (9.521777599039648, 3.5103682096837554, 0.0033391650742551826),
    (-9.542375891163315, 0.6293210364779545, 1.0),
    (7.265296759168557, 5.275066059792332, 0.08421127280991954),
    (-5.207476976098708, 0.4194640451172159, 1.0),
    (-25.275842884497834, 2.291400670137618, 1.0),
    (3.248898282935432, 9.372480940138212, 0.36443003427799453),
    (-6.008484142629314, 0.8277539673526755, 0.9999999999998047),
    (3.8150916847336696, 1.9653719666099894, 0.026119737755843912),
    (-9.704213483078508, 2.5851072605137615, 0.9999129450504469),
    (-6.331134779714032, 7.023639951811016, 0.8163131327165624),
    (1.1225020175565987, 9.228060326172267, 0.4515920340454178),
    (-1.1418645248383346, 0.6690255081593732, 0.9560664633070207),
    (2.17476994172182, 1.3927862386239458, 0.059208478682455476),
    (8.496369417063384, 8.266055155081316, 0.1520072187589031),
    (-23.371483358849076, 8.624057505014862, 0.9966361777330607),
    (-7.920977483150294, 4.2425787228735015, 0.9690505721728154),
    (-6.118179599458586, 3.9657752258935686, 0.9385536613501659),
    (-7.826938678061115, 8.470797833722967, 0.8222544290057078),
    (-6.750081948355722, 6.589667095308252, 0.8471634454358706),
    (3.293723899328347, 7.880080161033418, 0.3379804991819453),
    (3.064386716024705, 1.7736007409398593, 0.04201409870658742),
    (-6.540575508015925, 2.63733225891375, 0.993430821528021),
    (-2.663805945497857, 5.6007949308951614, 0.682824630079103),
    (-2.51687535011206, 6.3724616642922465, 0.6535642527376775),
    (-15.157712213839751, 5.450246195112466, 0.9972912974583362),
    (-0.5953360176007081, 6.155944854667654, 0.5385213019768135),
    (-4.966394694203964, 6.381779928214283, 0.7817787620004831),
    (8.363723774163123, 4.170706459810436, 0.02246285256163986),
    (-7.08371064367374, 0.23605964755437966, 1.0),
    (8.977229280919286, 5.411171799256776, 0.04855612237071559),
    (-3.0854740914854766, 4.939488789589112, 0.7339010918131684),
    (-0.8056882478963185, 1.0233778619054124, 0.784441963288029),
    (0.13300105615696367, 9.647822906715529, 0.4945005143029878),
    (-1.4872462870656413, 5.904253558722578, 0.599438517087099),
    (-37.027751301721224, 9.06223998201489, 0.999978050455837),
    (8.713562363489565, 3.901737595531366, 0.012766173280042014),
    (8.608992100046166, 6.244988304875888, 0.08401767310534584),
    (6.82535836893711, 0.3638897254987227, 8.538928103464904e-79),
    (-9.414424157811634, 6.531527366898399, 0.9252615643082139),
    (-6.519370560363011, 2.8741797979341133, 0.9883431428772839),
    (7.790150298916075, 6.256903171274673, 0.10655689125269147),
    (5.971973161046888, 1.2542705926728253, 9.616938770023723e-07),
    (5.982969865281511, 7.270661565658251, 0.20528468166168046),
    (-4.920332552827427, 3.4891901949050164, 0.920754459448691),
    (-8.07951394648616, 3.587142189602986, 0.9878500439080378),
    (-9.85419641840561, 3.6673709958661536, 0.99639506570405),
    (0.6776472915627796, 5.777598042225326, 0.45331561716146485),
    (2.0841605060575823, 0.4183051857180067, 3.140148526613752e-07),
    (-2.1156229003433946, 4.273141874837311, 0.689734436752497),
    (-0.18755149838225016, 5.6926464135429, 0.5131412849445693),
    (5.540014215100005, 3.8545649665333124, 0.07532198501719704),
    (8.58725703217635, 3.6164547741975763, 0.00878646569792957),
    (5.470314594455255, 4.164950978671247, 0.09452135031081506),
    (6.949261191323885, 9.995126324746321, 0.24344463185562595),
    (38.368105147655825, 9.286453038829082, 1.801069319641752e-05),
    (-3.7851810247704076, 9.359638321883065, 0.6570463277895202),
    (-4.4396680496302166, 1.7558543773755333, 0.9942723551352485),
    (2.2192688850192255, 4.2272221100202785, 0.2997934638483493),
    (-4.684046839510103, 1.8413288204416378, 0.994517943249474),
    (-5.764752847628176, 7.974584714849753, 0.7651264704301292),
    (0.5948465704979693, 5.190053342168988, 0.45437601492566015),
    (0.521209180155477, 7.218497219004241, 0.4712195159998863),
    (2.7649528153930802, 4.017022125166425, 0.2456290815362802),
    (-9.604628076294663, 9.273800315018175, 0.8498227262828842),
    (-9.864810611612576, 3.832869626774618, 0.9949697105917468),
    (0.47370727888332453, 2.9258794959490744, 0.4356913071094799),
    (6.737765592341184, 3.5087043955215402, 0.027409998447822596),
    (-2.2255248814151685, 9.549531509787641, 0.5921389767786767),
    (5.988569866887534, 3.6171205694562745, 0.04889960288470179),
    (4.585790298992434, 0.49557970277491875, 1.0874562764891878e-20),
    (-3.4966064464162327, 0.8181885799378825, 0.999990382676812),
    (-1.3873798161006654, 4.6137324553127765, 0.6181808835709107),
    (-8.885325561956366, 5.452236781427157, 0.948413959215742),
    (-8.922804605934525, 8.78158891225931, 0.8452045638617657),
    (22.434851394816675, 1.3615599541137637, 2.6702531999301305e-61),
    (-2.2581224921138343, 1.222837272123526, 0.9675992822748434),
    (-4.617344894654247, 7.768174091269548, 0.7238752086899485),
    (-3.8009788780073306, 1.6985156263997916, 0.9873837296804516),
    (6.192958996105602, 7.767232728031007, 0.21263301512093136),
    (-6.264066515455864, 9.685181900896989, 0.7411089734482443),
    (-5.0344681024349764, 9.524995141522952, 0.7014423360374428),
    (-2.6219909692239156, 2.4193890458858696, 0.8607601619568093),
    (-1.0869334006837228, 9.729980290230586, 0.5444732150300226),
    (-1.6515439552156224, 9.967085627412562, 0.5658033927512134),
    (33.53297858981796, 3.5492846056925855, 1.7299125675999813e-21),
    (9.81249938871946, 9.211220751138715, 0.14337535338246665),
    (-1.2436662170210582, 1.6815617681653976, 0.7702255851388782),
    (-1.6055859155188035, 4.465528657018943, 0.6404085858290003),
    (-5.866356844581206, 2.4026954741070217, 0.9926882880226671),
    (-5.187652676429102, 6.301224385996025, 0.7948247355282511),
    (8.792089208751303, 2.8450180684666795, 0.0009996184318479622),
    (4.519428280498165, 7.050158448714133, 0.2607485912937685),
    (-9.74313432345886, 4.214316571535425, 0.9896087678146102),
    (-5.063124518060771, 2.859793659855808, 0.9616739790925003),
    (-18.123649563985396, 0.5492122070319352, 1.0),
    (5.663140025737217, 2.6526557012280465, 0.016384814982745834),
    (-5.897455599949046, 4.72461867402937, 0.8940283167235307),
    (-1.383445031629126, 2.5707953045307446, 0.7047594307706707),
    (5.267309819869499, 2.329267580479935, 0.011868522867730697),
    (9.227187056739176, 3.482307888931453, 0.004027767062970678),
    (1.3422907075889121, 1.0609798388054328, 0.10291012138987876),
    (1.542583902289703, 2.4058505177145837, 0.2607027810125656),
    (-5.428201629239348, 9.212940401504133, 0.7221341533402222),
    (9.993931967381886, 8.948017634578093, 0.13202114514160812),
    (-23.850562295964444, 6.3975298792504915, 0.9999035314680563),
    (3.8580646878326412, 5.464909701324451, 0.24010326125356427),
    (1.7243983455053993, 2.7269516564222593, 0.2635778455049894),
    (-6.077813750784859, 6.2603027131103985, 0.834188464830279),
    (7.154568607278581, 5.247645298785429, 0.08638037123716015),
    (7.486360581900328, 7.93059575796029, 0.17258874873901522),
    (-9.854670014769217, 9.916135005802102, 0.839840246353359),
    (6.375825198507364, 0.8894452762439825, 3.7962822258823265e-13),
    (6.049697581461494, 0.6880791769617411, 7.33602157742576e-19),
    (1.062373991165682, 6.995180246460753, 0.4396438349795184),
    (17.298898767016063, 8.438977978050042, 0.020188033060744796),
    (2.625979678047642, 2.1180951056963884, 0.10752771389668651),
    (4.725578262139267, 8.763563604983478, 0.2948640080649651),
    (-4.849900461477459, 3.1583361559245358, 0.9376801678768383),
    (6.46034961406729, 2.7503174255471587, 0.009413295511966943),
    (2.5034988781294345, 6.377280748837502, 0.34732030097805006),
    (-3.7267998806348217, 2.9338498549588548, 0.8980068828700349),
    (-7.560821421997472, 8.641369879385273, 0.8092011708803707),
    (3.2435584988301702, 5.705802263686027, 0.2848590604921654),
    (9.173022772033509, 0.3341604309795534, 3.383846248869949e-166),
    (-22.862130431024763, 6.142083729720168, 0.9999012569821191),
    (2.137870833480884, 6.869181382635588, 0.37781424399916463),
    (-6.358459907528564, 9.397668508806554, 0.7506700224624703),
    (-5.086356920334398, 6.305532310654866, 0.790065888008145),
    (-9.433313073289412, 2.2165285348129, 0.9999895892870619),
    (-1.3276440980345328, 4.309518598287279, 0.6209864107652575),
    (1.3970322315434274, 4.450951048817095, 0.37680884502334444),
    (6.2946832436347435, 6.15710982541858, 0.15330909762752243),
    (3.696447236103742, 0.4278466246689588, 2.8191507747108635e-18),
    (-4.292899341475412, 6.245387377066809, 0.7540755754815371),
    (15.44559106199312, 0.17300759116195372, 0.0),
    (4.457117747218014, 7.0302561547189955, 0.2630434120000311),
    (-3.906838151462888, 4.799956728780756, 0.7921580326111868),
    (-2.6853731173579343, 8.133451032933237, 0.6293619947135264),
    (-7.998473124324603, 7.646867881786395, 0.8522149349470969),
    (3.8169675376120544, 0.8159463783931998, 1.4486891200159303e-06),
    (4.942723144986063, 0.581472220126806, 9.450189161742199e-18),
    (-8.66319820902814, 5.977486780024212, 0.926373710988143),
    (2.698453710525907, 8.087794107415046, 0.3693236517453145),
    (7.0480740296029545, 5.759858025155954, 0.11054136622374752),
    (34.159385749451175, 8.503696767079736, 2.9471335230205133e-05),
    (0.6969583053304529, 4.924245081361566, 0.4437232328438454),
    (2.856613364170528, 1.302403306952539, 0.014141443244084872),
    (-6.423052581221453, 9.264856460898182, 0.7559301246120136),
    (6.319568231961828, 5.45580104086588, 0.12336655794337574),
    (5.884276991199206, 6.731649545875329, 0.19102615047352622),
    (-5.455600682969903, 2.4603548619916396, 0.9867022512792503),
    (8.458748204464655, 0.5844451792310256, 8.957210359858374e-48),
    (1.1057727785086975, 4.029213309679719, 0.3918736847057305),
    (9.079149935599663, 2.65418948497087, 0.0003123165436445484),
];
