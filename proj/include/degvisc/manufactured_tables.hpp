// Generated by tools/gen_manufactured.py; do not edit.
#pragma once

namespace degvisc::manufactured_tables {

inline constexpr int kModes = 40;
inline constexpr int kPowers = 5;
inline constexpr double kA = 0.1;
inline constexpr double kB = 0.1;
inline constexpr double kC = 0.05;
inline constexpr double kEpsilon = 0.5;
inline constexpr double kA2D_alpha = 0.8;
inline constexpr double kA2D_gamma = 1.4;
inline constexpr double kB3D_alpha = 0.8;
inline constexpr double kB3D_gamma = 1.4;
inline constexpr double kC3D_alpha = 1.0;
inline constexpr double kC3D_gamma = 1.4;

// Layout: [component (rho, u_1, ...)][power of exp(-t)][mode][cos, sin].
inline constexpr double kA2D_1d[] = {
    1.3539430935869281319e-1, 0.0,
    2.0249575812196677744e-43, 5.3988085220666286069,
    4.4773874703965345627e-2, 1.744949688181480509e-42,
    -1.4895713269451560001e-42, -5.5285675974277801724e-3,
    -3.1380408971606464613e-4, -3.6701840219926594069e-42,
    3.1392215964568707271e-42, 1.6758338576829643048e-5,
    8.7708772514942743791e-7, 1.5012574065152727742e-41,
    1.5982227017216236309e-40, -4.5448717320846303969e-8,
    -2.3409400902589991364e-9, -1.7667550671941074028e-41,
    1.6629793488140917768e-41, 1.2008749467401080631e-10,
    6.1422472655564319493e-12, -4.5256013429404733868e-41,
    -1.7145554244492945228e-41, -3.134599480640202629e-13,
    -1.5968567979978649845e-14, 4.9924506103471284371e-41,
    -4.0653720592032289718e-41, 8.1231293785972302639e-16,
    4.127247649335911018e-17, 6.2161994596213855933e-41,
    -4.5783611726479537472e-41, -2.0948753091191026757e-18,
    -1.0623783545987015441e-19, -2.4206389477325137449e-41,
    -7.8668067704305720724e-41, 5.3836109644548354039e-21,
    2.726352770245138517e-22, -4.1788346739318623925e-41,
    5.5885674349832350007e-41, -1.3798683120331719949e-23,
    -6.98020458447045662e-25, -4.8632854395998321424e-41,
    -9.3528416502657937588e-41, 3.5293676883175256867e-26,
    1.7837900349854372718e-27, 2.5926935220879927699e-41,
    -1.4076236441632095819e-42, -9.0120925851409921599e-29,
    -4.5515292999906576412e-30, 5.6166587646328800508e-41,
    -2.6689817157563985791e-41, 2.2980084846586434902e-31,
    1.1598978014016307843e-32, 6.2258736774059876202e-41,
    1.9461162132655007814e-40, -5.8529052776183443981e-34,
    -2.9526919471007374877e-35, 8.8303091299186807871e-41,
    -2.220292559430181711e-40, 1.4895774849295175653e-36,
    7.5113151077644171752e-38, 1.3079606978711413821e-40,
    1.3643567905289237589e-41, -3.7935581186091130025e-39,
    -2.5056153270434024507e-40, 1.4380059884859926326e-40,
    -6.9729667154146600604e-41, 2.2286343424254053302e-41,
    4.0920069156959983128e-41, -1.3398788872069263827e-40,
    -9.2083165772514875151e-41, 5.15158506628147553e-42,
    1.487153067401898816e-40, 5.6172892016361444992e-41,
    -1.401337282593222755e-40, -1.1521621665582362054e-41,
    -3.3340302849554710338e-41, -1.6874033296115635264e-41,
    2.1938327805000122565e-40, -9.1165501920156379725e-41,
    2.259390036822731821e-43, 0.0,
    6.2831853071795864769e-1, 1.1044853763539058282e-43,
    -9.1532517226510187143e-44, 6.2831853071795864769e-2,
    7.6031827239643965236e-42, 5.9238238294313911961e-43,
    -5.8293071614336494506e-43, 4.0880141060232102726e-43,
    -3.4445667876184409625e-42, 1.4807191951377510701e-42,
    5.1790932488284776088e-42, 1.1546557405005028192e-42,
    1.0505884911659234785e-41, -1.3840350900314152636e-41,
    4.3429725221107250541e-42, 7.172471173922760357e-42,
    -3.8812464215636620822e-42, 4.8573753552329261639e-43,
    4.6584538272422495479e-43, 9.415754372886956481e-43,
    -2.573834954348607755e-42, -9.1714320106017342712e-43,
    7.5192452447766758664e-42, -3.2264707579308244615e-42,
    -2.4065199177082245968e-41, -2.6741408689673468095e-41,
    1.4864097351873509776e-41, -1.9378451157363365054e-41,
    -1.8279237817885076282e-41, 9.0237510414945138503e-42,
    -6.5179363754054550285e-43, 3.287150921590465564e-42,
    2.7112322687756560688e-41, -8.081855823786781037e-42,
    -4.413526584538459541e-42, -7.0588173225353135632e-43,
    1.9884425208769154236e-42, 3.080006119998225186e-42,
    -3.4683035659659241222e-42, 1.0108422594269929883e-41,
    -3.5288198577859705889e-42, -9.4245671405916020189e-42,
    -7.5583850852558346705e-42, -3.4801853036350229288e-42,
    -1.0525853414775863428e-41, 8.1410988822387490482e-42,
    3.8019744538956178498e-42, -1.0078620163978977585e-41,
    -1.2633406305120388303e-41, -1.9573150121862980759e-42,
    -7.5979778755253386378e-42, 2.7668494673974738356e-41,
    1.9527094100366325883e-42, 4.6714763024269940926e-42,
    1.5799810040959143049e-41, -3.4884707225010840028e-42,
    8.1177220038336652919e-42, 9.8445035909917462717e-42,
    -1.8117691944720452863e-42, -4.8059795241551698304e-42,
    4.7659562070151353399e-41, -7.9981056638233638758e-42,
    1.0909992879028758448e-41, -4.4149710908788901441e-42,
    -2.8788275651089041905e-41, -3.2395123960826763454e-42,
    5.3738794467776624884e-43, -5.5220354572816434656e-42,
    -1.1530584413696757268e-41, -1.6097002364062249763e-41,
    -4.7840782986174362303e-42, -1.4960674702719599982e-41,
    -3.4720672699808154975e-41, -2.8742536023235790254e-41,
    2.8028412189214743374e-42, 2.769714944109945371e-42,
    -1.2863219253269658303e-41, 4.6537744704327937875e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    1.2868129063839043549e-43, 0.0,
    8.807056571124334078e-1, 2.2452618138581592065e-43,
    -4.68475486266124869e-43, -2.6481337829974647467e-2,
    -1.0617902929702099928e-3, -3.6734698773945974397e-43,
    -1.7955697694080147146e-42, 4.612326856771080221e-5,
    2.0806643025006639846e-6, 2.4486684268047956877e-42,
    6.3838600889224055737e-42, -9.594781788146034689e-8,
    -4.4887020675908788703e-9, -2.471436087099558385e-41,
    5.0606848997126977191e-42, 2.1213777376627330937e-10,
    1.0101704112555697839e-11, 8.3421888105801651446e-43,
    9.7992584545447944981e-43, -4.8384343572530083913e-13,
    -2.328258955484060353e-14, -1.4988630363149142286e-42,
    8.3870385236683890547e-42, 1.124605935990256484e-15,
    5.4492104987098898812e-17, -4.2397404190231570937e-41,
    1.9070219165465720123e-41, -2.6473886101542072632e-18,
    -1.2890977542315909459e-19, 1.3919109493630310802e-41,
    -2.1104896772269452046e-42, 6.289339399813777489e-21,
    3.07374249127118453e-22, -9.7346606994488014714e-42,
    -7.5793284606621891117e-42, -1.504474016472000733e-23,
    -7.373659472349523343e-25, 3.7781404177632992235e-42,
    -4.4330392687885830094e-42, 3.6182685485332920878e-26,
    1.7774008435420819436e-27, -1.2498360581810037334e-41,
    -1.134170161130617293e-41, -8.7396075658021891091e-29,
    -4.3011216651108339371e-30, 1.1642371841525333477e-41,
    5.9672046329763167921e-42, 2.1184642751442650701e-31,
    1.044193048589874055e-32, -4.9432488974994014906e-42,
    -1.7610024356514735967e-41, -5.1503272706164186921e-34,
    -2.5419117509461085768e-35, 9.7789145286652806927e-42,
    2.8004461799608911056e-41, 1.2552645774320165143e-36,
    6.2034430640512943792e-38, 2.4909499113455764187e-41,
    -2.7761289173596214844e-43, -3.0704222363487729203e-39,
    -8.7705869583625975652e-41, -1.80237118011759084e-41,
    1.4998489336427084313e-41, -2.9295917122571596903e-43,
    -4.3391206947817960601e-41, -5.5832699432729924768e-42,
    3.6740019461701905783e-44, -1.4807126625341762097e-41,
    -1.617028362907622659e-41, -2.5235658496228235452e-41,
    -6.1920550727100367117e-42, -2.576101482519923715e-41,
    -5.0152472038185202968e-41, -3.8309008102903345143e-41,
    -1.7195777895362641554e-42, 3.3591204899537412032e-42,
    -1.8979186400815322409e-41, 1.8355120630421683406e-42,
    -9.2453397041985582024e-1, 0.0,
    1.0064590534464352577e-41, 1.8390675263195305103e+1,
    -1.2310300131740332356, 1.583926923499656428e-41,
    -4.0509749576206851066e-41, 3.8893807422683508995e-2,
    1.814688991269916866e-3, -1.9624168931949071486e-41,
    4.2351115931732004948e-41, -8.9497081590969970362e-5,
    -4.4838602216413581329e-6, 3.2832057915186423202e-41,
    6.0775148094114865752e-40, 2.259255442127272653e-7,
    1.140882812173232006e-8, -8.4517716513480752874e-41,
    9.0738179362546295521e-41, -5.7657933626305732394e-10,
    -2.9143015023856117069e-11, -1.6868994548628671494e-40,
    -3.2176806511941593126e-41, 1.4727392003143544482e-12,
    7.4397558840897450729e-14, 1.6845942813348432562e-40,
    -6.9934470337565855403e-41, -3.7565698126858501082e-15,
    -1.8958298366076972529e-16, 2.6637403075049306395e-40,
    -8.2729708060545615147e-41, 9.5623796827759631225e-18,
    4.8203554158891143732e-19, -1.0689245954884178119e-40,
    -2.7605290273993363671e-40, -2.4284432350527026831e-20,
    -1.2226505000116883297e-21, -1.1225762335981093665e-40,
    1.9704600275084239762e-40, 6.1516458260632479505e-23,
    3.0930224211518837987e-24, -1.7276824504390545243e-40,
    -3.4670391056464034243e-40, -1.5540477709105146004e-25,
    -7.8022607391187488684e-27, 6.7549656944388328311e-41,
    2.6842258970894219632e-41, 3.9141265876667217536e-28,
    1.9619557516805422958e-29, 2.6896516805482009628e-40,
    -1.2967302446295386848e-40, -9.8256897821216209992e-31,
    -4.9162471485136094695e-32, 1.3071215242895765788e-40,
    5.7717837062806012263e-40, 2.4574013061865240673e-33,
    1.2270446516220418699e-34, 3.2005124153644667633e-40,
    -5.7937434249315805762e-40, -6.1189944801833757099e-36,
    -3.0482984861233702981e-37, 4.978867972390627947e-40,
    2.7226925523163572054e-40, 1.5223384728365544328e-38,
    5.2473019029353704915e-40, 4.8485062205727626723e-40,
    -1.8362185025148441445e-40, 6.2965859700778214641e-41,
    1.5756455513069378832e-40, -3.9595874756945540855e-40,
    -3.5501697967349879762e-40, -2.1850356612935050918e-41,
    4.2838472914384740975e-40, 1.5628689198238646269e-40,
    -5.9219410454555764144e-40, 3.724180354492299151e-41,
    -1.9194261938597682004e-40, 3.7169663921526987225e-41,
    6.776973670359741835e-40, -5.4185722268701164911e-40,
    -5.2707468066099368772e-45, 0.0,
    2.5398933650058013981e-44, 8.5982867583944438317e-45,
    5.6810117512750037215e-44, 3.1415926535897932385e-2,
    9.8478049893283057838e-45, 3.3945469314040826498e-43,
    9.3549135223245242947e-44, 9.2608732132591212502e-44,
    -5.227101146416015362e-45, -1.5332284555876342248e-43,
    2.7675785827484967975e-44, -2.5621866608639077131e-43,
    9.2313313146877529413e-43, 1.3376390007982846001e-42,
    2.6713742275346468461e-44, -8.7040692217761289061e-44,
    -1.3567923005965445456e-43, -1.05591116617699341e-43,
    -1.6058627726298205398e-43, 3.9323938155115179053e-44,
    -1.9124947228553548153e-43, -1.0591737034132773564e-43,
    4.1624317906105642002e-43, 2.0018079179505169954e-43,
    2.0895261101023024382e-43, 1.3414028148172098116e-42,
    6.5853689870128296593e-43, 1.3884240346838328141e-42,
    3.7557575653385302366e-43, -3.2749769001268943498e-43,
    2.8131540783582844348e-43, 4.038121131129887644e-46,
    -1.4351774334447140005e-43, -4.5740461231724872687e-43,
    2.0283940928599675752e-43, -1.6079899878127275889e-43,
    1.3901905952501984188e-43, -3.2611944426335742621e-44,
    1.2262079965693101219e-44, 4.9643576843551121612e-44,
    -6.0070231497469550707e-43, -1.7622531733507215148e-43,
    7.3740422238543123504e-44, -6.2208893700619847842e-43,
    -1.4649550258116163632e-43, 2.6855659153448681826e-44,
    -2.6876011310598640124e-43, 7.9039730188896601473e-44,
    1.800070396065207412e-43, 4.7130594491402378689e-43,
    1.7164122757267204677e-42, 3.4485079395493545105e-43,
    1.8569981461784031055e-43, -1.0198267125431693691e-42,
    -1.5640696766921137559e-42, 5.5509181389412205727e-43,
    -2.6630652128093349589e-43, -3.2612276771231670837e-42,
    -6.5289373316007429682e-43, -6.4126920973664441208e-43,
    6.5839719815391024405e-43, 1.926359518122748372e-42,
    -9.087084405729678546e-44, 3.7463981210998407041e-43,
    9.790974888877476759e-43, 1.2560123470739040044e-43,
    -1.6196131598728723334e-43, 1.7083579903199926116e-42,
    -3.7719709287947711194e-44, 2.931023673751639253e-43,
    -1.1082875149986137383e-43, 7.4680029420904135814e-43,
    6.8937903138859174648e-43, -4.8113910505675031601e-43,
    1.7312607292587798094e-42, 1.8584720883107886403e-43,
    3.9869718119521250533e-43, -3.0551482035359386718e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
};

inline constexpr double kA2D_2d[] = {
    2.7078861871738562638e-1, 0.0,
    4.0499151624393355488e-43, 1.0797617044133257214e+1,
    8.9547749407930691254e-2, 3.489899376362961018e-42,
    -2.9791426538903120002e-42, -1.1057135194855560345e-2,
    -6.2760817943212929226e-4, -7.3403680439853188137e-42,
    6.2784431929137414542e-42, 3.3516677153659286096e-5,
    1.7541754502988548758e-6, 3.0025148130305455484e-41,
    3.1964454034432472619e-40, -9.0897434641692607937e-8,
    -4.6818801805179982729e-9, -3.5335101343882148056e-41,
    3.3259586976281835536e-41, 2.4017498934802161262e-10,
    1.2284494531112863899e-11, -9.0512026858809467737e-41,
    -3.4291108488985890457e-41, -6.2691989612804052581e-13,
    -3.193713595995729969e-14, 9.9849012206942568743e-41,
    -8.1307441184064579436e-41, 1.6246258757194460528e-15,
    8.2544952986718220359e-17, 1.2432398919242771187e-40,
    -9.1567223452959074943e-41, -4.1897506182382053514e-18,
    -2.1247567091974030881e-19, -4.8412778954650274898e-41,
    -1.5733613540861144145e-40, 1.0767221928909670808e-20,
    5.4527055404902770341e-22, -8.357669347863724785e-41,
    1.1177134869966470001e-40, -2.7597366240663439899e-23,
    -1.396040916894091324e-24, -9.7265708791996642848e-41,
    -1.8705683300531587518e-40, 7.0587353766350513734e-26,
    3.5675800699708745435e-27, 5.1853870441759855397e-41,
    -2.8152472883264191638e-42, -1.802418517028198432e-28,
    -9.1030585999813152823e-30, 1.1233317529265760102e-40,
    -5.3379634315127971583e-41, 4.5960169693172869803e-31,
    2.3197956028032615687e-32, 1.245174735481197524e-40,
    3.8922324265310015627e-40, -1.1705810555236688796e-33,
    -5.9053838942014749754e-35, 1.7660618259837361574e-40,
    -4.4405851188603634221e-40, 2.9791549698590351307e-36,
    1.502263021552883435e-37, 2.6159213957422827642e-40,
    2.7287135810578475178e-41, -7.587116237218226005e-39,
    -5.0112306540868049013e-40, 2.8760119769719852652e-40,
    -1.3945933430829320121e-40, 4.4572686848508106603e-41,
    8.1840138313919966256e-41, -2.6797577744138527654e-40,
    -1.841663315450297503e-40, 1.030317013256295106e-41,
    2.974306134803797632e-40, 1.1234578403272288998e-40,
    -2.80267456518644551e-40, -2.3043243331164724108e-41,
    -6.6680605699109420676e-41, -3.3748066592231270528e-41,
    4.3876655610000245129e-40, -1.8233100384031275945e-40,
    1.1014653122238338632e-43, 0.0,
    9.4247779607693797154e-1, 1.6427150798876105717e-43,
    -5.7424763373250707671e-44, 9.4247779607693797154e-2,
    1.043074028150981647e-41, 7.8102391727777896922e-43,
    -1.1273304470256768989e-42, 9.453098519484631867e-43,
    -5.56630782491425461e-42, 2.9816335342189210704e-42,
    7.9525602966853486537e-42, 1.4215960009028072475e-42,
    1.6331432952473580553e-41, -2.1003826796339625318e-41,
    5.5980095874976572168e-42, 1.0356534101622918036e-41,
    -6.3443787972306092886e-42, 1.3112767055844504597e-43,
    1.2228536997438190167e-42, 1.3197022949795649433e-42,
    -5.0250562930687940163e-42, -1.6291746613250114284e-42,
    1.1249440599414192641e-41, -3.9092439565845581572e-42,
    -3.6194138035045700125e-41, -4.0114565306822770573e-41,
    2.3462726999360674875e-41, -2.893210110962162153e-41,
    -2.7998643966442007486e-41, 1.3019598402754156889e-41,
    -9.013196900051157239e-43, 3.2470662774994306353e-42,
    3.9155782339396201004e-41, -1.201067985853418619e-41,
    -6.2335315006540397999e-42, -2.7519414679007572604e-42,
    4.5472135167340313951e-42, 4.6560926154537018185e-42,
    -5.0486628424892375098e-42, 1.5007790411097002537e-41,
    -3.2762358095914223118e-42, -1.382506180257513123e-41,
    -1.183293663502257484e-41, -4.6951413559468091958e-42,
    -1.6686662113179921681e-41, 1.2649554093459628907e-41,
    6.1089879108815425209e-42, -1.5259461390865272902e-41,
    -1.7091637369369793814e-41, -3.3395464760049944303e-42,
    -1.2135801428603267757e-41, 4.3176417864290060923e-41,
    3.2426046464476267021e-42, 6.3668210554440497374e-42,
    2.349337386256688526e-41, -3.5721674035267177751e-42,
    1.1881609679010123944e-41, 1.4323419584836855407e-41,
    -2.9423870329241604672e-42, -7.0443167166745887398e-42,
    6.9448351891937934035e-41, -1.1959586180660336656e-41,
    1.5955810166960291087e-41, -6.6946235072310632953e-42,
    -4.3555859517376126607e-41, -5.3790627432345013503e-42,
    1.1021062176052669795e-42, -7.4324650180773012364e-42,
    -1.7511326259435076527e-41, -2.5496705590318579505e-41,
    -7.447619025389087653e-42, -2.2946880799700658935e-41,
    -5.2471620996642775221e-41, -4.3215398173517234618e-41,
    3.969894660223885851e-42, 2.2600168923977653766e-42,
    -1.8450896879764866373e-41, 1.4694809751757308657e-42,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    1.2868129063839043549e-43, 0.0,
    8.807056571124334078e-1, 2.2452618138581592065e-43,
    -4.68475486266124869e-43, -2.6481337829974647467e-2,
    -1.0617902929702099928e-3, -3.6734698773945974397e-43,
    -1.7955697694080147146e-42, 4.612326856771080221e-5,
    2.0806643025006639846e-6, 2.4486684268047956877e-42,
    6.3838600889224055737e-42, -9.594781788146034689e-8,
    -4.4887020675908788703e-9, -2.471436087099558385e-41,
    5.0606848997126977191e-42, 2.1213777376627330937e-10,
    1.0101704112555697839e-11, 8.3421888105801651446e-43,
    9.7992584545447944981e-43, -4.8384343572530083913e-13,
    -2.328258955484060353e-14, -1.4988630363149142286e-42,
    8.3870385236683890547e-42, 1.124605935990256484e-15,
    5.4492104987098898812e-17, -4.2397404190231570937e-41,
    1.9070219165465720123e-41, -2.6473886101542072632e-18,
    -1.2890977542315909459e-19, 1.3919109493630310802e-41,
    -2.1104896772269452046e-42, 6.289339399813777489e-21,
    3.07374249127118453e-22, -9.7346606994488014714e-42,
    -7.5793284606621891117e-42, -1.504474016472000733e-23,
    -7.373659472349523343e-25, 3.7781404177632992235e-42,
    -4.4330392687885830094e-42, 3.6182685485332920878e-26,
    1.7774008435420819436e-27, -1.2498360581810037334e-41,
    -1.134170161130617293e-41, -8.7396075658021891091e-29,
    -4.3011216651108339371e-30, 1.1642371841525333477e-41,
    5.9672046329763167921e-42, 2.1184642751442650701e-31,
    1.044193048589874055e-32, -4.9432488974994014906e-42,
    -1.7610024356514735967e-41, -5.1503272706164186921e-34,
    -2.5419117509461085768e-35, 9.7789145286652806927e-42,
    2.8004461799608911056e-41, 1.2552645774320165143e-36,
    6.2034430640512943792e-38, 2.4909499113455764187e-41,
    -2.7761289173596214844e-43, -3.0704222363487729203e-39,
    -8.7705869583625975652e-41, -1.80237118011759084e-41,
    1.4998489336427084313e-41, -2.9295917122571596903e-43,
    -4.3391206947817960601e-41, -5.5832699432729924768e-42,
    3.6740019461701905783e-44, -1.4807126625341762097e-41,
    -1.617028362907622659e-41, -2.5235658496228235452e-41,
    -6.1920550727100367117e-42, -2.576101482519923715e-41,
    -5.0152472038185202968e-41, -3.8309008102903345143e-41,
    -1.7195777895362641554e-42, 3.3591204899537412032e-42,
    -1.8979186400815322409e-41, 1.8355120630421683406e-42,
    -1.6958065223619318767, 0.0,
    3.5955739225466669385e-41, 3.3816126302036826231e+1,
    -2.1905746628058668146, 1.4026996860047835922e-41,
    -7.8135949921354676183e-41, 7.1486037373319760007e-2,
    3.377990199528893874e-3, -9.7645902294908190531e-42,
    4.7307506196004007585e-41, -1.6773577070554329188e-4,
    -8.440170634988776789e-6, 9.2552337180108082769e-41,
    1.1256530107363833256e-39, 4.2657442334300720807e-7,
    2.159157466107504288e-8, -1.6780372658375045256e-40,
    1.3126763485806605414e-40, -1.0932583063789989579e-9,
    -5.5347424419903044818e-11, -2.8611218191541818737e-40,
    -2.2929928317829549429e-41, 2.8010001664534385812e-12,
    1.4168622335479294143e-13, 2.9359699595830042471e-40,
    -1.3112794321793276185e-40, -7.1634673946978316225e-15,
    -3.619880651593201216e-16, 5.0024050412553873028e-40,
    -1.577083439084841778e-40, 1.82826864389337133e-17,
    9.2291609050708430126e-19, -1.8280903217611701872e-40,
    -5.1360204712598238062e-40, -4.6565365846391916244e-20,
    -2.3482492521952319788e-21, -2.2631726122942703372e-40,
    3.3307048303644379506e-40, 1.1836047538878305975e-22,
    5.9628031791189262944e-24, -3.1967955294145332832e-40,
    -6.3822639805728058915e-40, -3.0024398302404550025e-25,
    -1.5110396087385942347e-26, 1.1545507046602475721e-40,
    5.6260799871625779674e-41, 7.600664138625638665e-28,
    3.8211728988122421887e-29, 4.8832219549302741668e-40,
    -2.393842632800063498e-40, -1.92001856851380181e-30,
    -9.6420802751891492811e-32, 2.2724069300263027119e-40,
    1.088696227016119554e-39, 4.8393215383904633331e-33,
    2.4273668204638159491e-34, 5.8915008111601296782e-40,
    -1.0867112476329346323e-39, -1.2165907709171395219e-35,
    -6.0941867716730565435e-37, 9.0994380381909762122e-40,
    4.9963623349753734615e-40, 3.0574943832944977932e-38,
    1.093142286307039338e-39, 8.8913531827378881474e-40,
    -3.3849737973019700087e-40, 7.6104804493109070733e-41,
    2.4642771203793619495e-40, -7.2959624808684345384e-40,
    -6.258632329400140335e-40, 4.2533637038423785451e-41,
    8.556764291481868391e-40, 3.1980739562878675757e-40,
    -1.0386436517228059618e-39, 3.8331399683926576072e-41,
    -3.6414292984912016485e-40, 6.913390763107388465e-41,
    1.2446050095581075356e-39, -9.888836932419145964e-40,
    -4.6218269341536153057e-45, 0.0,
    1.387400065528437274e-44, 2.8848086973144651763e-46,
    5.9203573525095638943e-44, 4.7123889803846898577e-2,
    1.3135034668238082487e-44, 5.1733803467875293432e-43,
    1.1299838278053393154e-43, 3.250199606422102243e-44,
    -2.7721573682232365237e-44, -2.1058504272264844739e-43,
    5.6840380694780138676e-44, -3.4555144318709785958e-43,
    1.3284288057451195057e-42, 2.0056045849457289647e-42,
    7.9219389260094279611e-44, -1.011337705758207751e-43,
    -1.6982199608017084634e-43, -1.6403565936085843031e-43,
    -2.3277815914759523227e-43, 6.5335540899144595932e-44,
    -2.5919856375788808514e-43, -1.5935775185910325933e-43,
    5.7361148983682016174e-43, 3.399016598867637821e-43,
    2.6050800419857844604e-43, 1.9916868656948320312e-42,
    1.0027817253893959313e-42, 2.0580695383230547719e-42,
    5.9480526909406761852e-43, -4.8664852443296834646e-43,
    3.9412230477528692593e-43, 3.8484567283449694595e-44,
    -2.2469158907388946477e-43, -6.8177165135186818749e-43,
    3.2440277935366438168e-43, -2.1974111543693537693e-43,
    1.9473455752933234477e-43, -5.5661665499066796086e-44,
    -4.9034670208604319763e-45, -2.3713108391430813614e-44,
    -8.620415421681254041e-43, -2.2608690698424173624e-43,
    1.1864620423917730815e-43, -9.7039918654493582161e-43,
    -2.4352153718825419416e-43, 8.1140097080643470463e-44,
    -3.8991541540191414075e-43, 1.4986985784560253364e-43,
    2.7373275845564390715e-43, 7.0069686485858415405e-43,
    2.5423009677565896078e-42, 6.144693766064322856e-43,
    3.0534955505697259231e-43, -1.511961094548632937e-42,
    -2.3374339807901608282e-42, 8.6302838128622755614e-43,
    -4.0817410674642019999e-43, -4.9430327002096165991e-42,
    -9.7016647385648490847e-43, -1.010161030470152506e-42,
    1.0196833425350531695e-42, 2.8628927110734459584e-42,
    -1.5986559651740616519e-43, 5.0459406228167890677e-43,
    1.4822213122047681792e-42, 1.8328930219515052587e-43,
    -2.2619207827454827097e-43, 2.521461424244467717e-42,
    -3.3151605231491031386e-44, 4.4153654587418236089e-43,
    -1.6900193360143154435e-43, 1.1799307883554073649e-42,
    1.0724728831207896376e-42, -7.296785426009728711e-43,
    2.5792653866415841244e-42, 2.7693160901219197364e-43,
    6.3929649533638056052e-43, -4.5695851322008628477e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    1.2868129063839043549e-43, 0.0,
    8.807056571124334078e-1, 2.2452618138581592065e-43,
    -4.68475486266124869e-43, -2.6481337829974647467e-2,
    -1.0617902929702099928e-3, -3.6734698773945974397e-43,
    -1.7955697694080147146e-42, 4.612326856771080221e-5,
    2.0806643025006639846e-6, 2.4486684268047956877e-42,
    6.3838600889224055737e-42, -9.594781788146034689e-8,
    -4.4887020675908788703e-9, -2.471436087099558385e-41,
    5.0606848997126977191e-42, 2.1213777376627330937e-10,
    1.0101704112555697839e-11, 8.3421888105801651446e-43,
    9.7992584545447944981e-43, -4.8384343572530083913e-13,
    -2.328258955484060353e-14, -1.4988630363149142286e-42,
    8.3870385236683890547e-42, 1.124605935990256484e-15,
    5.4492104987098898812e-17, -4.2397404190231570937e-41,
    1.9070219165465720123e-41, -2.6473886101542072632e-18,
    -1.2890977542315909459e-19, 1.3919109493630310802e-41,
    -2.1104896772269452046e-42, 6.289339399813777489e-21,
    3.07374249127118453e-22, -9.7346606994488014714e-42,
    -7.5793284606621891117e-42, -1.504474016472000733e-23,
    -7.373659472349523343e-25, 3.7781404177632992235e-42,
    -4.4330392687885830094e-42, 3.6182685485332920878e-26,
    1.7774008435420819436e-27, -1.2498360581810037334e-41,
    -1.134170161130617293e-41, -8.7396075658021891091e-29,
    -4.3011216651108339371e-30, 1.1642371841525333477e-41,
    5.9672046329763167921e-42, 2.1184642751442650701e-31,
    1.044193048589874055e-32, -4.9432488974994014906e-42,
    -1.7610024356514735967e-41, -5.1503272706164186921e-34,
    -2.5419117509461085768e-35, 9.7789145286652806927e-42,
    2.8004461799608911056e-41, 1.2552645774320165143e-36,
    6.2034430640512943792e-38, 2.4909499113455764187e-41,
    -2.7761289173596214844e-43, -3.0704222363487729203e-39,
    -8.7705869583625975652e-41, -1.80237118011759084e-41,
    1.4998489336427084313e-41, -2.9295917122571596903e-43,
    -4.3391206947817960601e-41, -5.5832699432729924768e-42,
    3.6740019461701905783e-44, -1.4807126625341762097e-41,
    -1.617028362907622659e-41, -2.5235658496228235452e-41,
    -6.1920550727100367117e-42, -2.576101482519923715e-41,
    -5.0152472038185202968e-41, -3.8309008102903345143e-41,
    -1.7195777895362641554e-42, 3.3591204899537412032e-42,
    -1.8979186400815322409e-41, 1.8355120630421683406e-42,
    -1.0777896951096142692, 0.0,
    9.9963433862945212899e-42, 2.1505791829591379733e+1,
    -1.5025212945467578583, 4.1466550436662638238e-41,
    -3.9281986785083692956e-41, 4.5197762891846844658e-2,
    2.0663028915075659973e-3, -3.1973462950211800093e-41,
    2.9586268845185015016e-41, -1.0077868043081845452e-4,
    -5.0134983772665724079e-6, 4.8242288359165682151e-41,
    7.2793660705940584742e-40, 2.5137635362696454973e-7,
    1.2648608053711197036e-8, -1.0649355494757401204e-40,
    8.5402107414598621932e-41, -6.3750857080474758247e-10,
    -3.2156051907312339528e-11, -1.7258488340132161567e-40,
    -1.294643888022629853e-41, 1.6224371415735222931e-12,
    8.1863034139009253196e-14, 1.7147624413144244652e-40,
    -7.5412916250384455013e-41, -4.1300624477361405927e-15,
    -2.0832164980338078891e-16, 3.2274835744799065298e-40,
    -1.3427618993037184916e-40, 1.0505004066934316718e-17,
    5.2957282973057622553e-19, -9.8455425618045633077e-41,
    -3.1766395474631566641e-40, -2.6687718635155564018e-20,
    -1.344451098298644544e-21, -1.6372856193392564286e-40,
    2.1550942683502983387e-40, 6.7704804105306111116e-23,
    3.4082290270309555821e-24, -2.0559921650525406526e-40,
    -3.9900960578532570802e-40, -1.7150114647365361316e-25,
    -8.6263753633277736163e-27, 9.2348165214768179687e-41,
    5.0104379960532259129e-41, 4.3371710514004691607e-28,
    2.1796912859492805791e-29, 2.9834833479846143201e-40,
    -1.3693622466635643365e-40, -1.0949303104286290287e-30,
    -5.4976006919535278154e-32, 1.341187130204104283e-40,
    6.6444841043304908063e-40, 2.7589677092910794005e-33,
    1.3838703612038500868e-34, 4.0743154100746434595e-40,
    -6.8284873548014803273e-40, -6.9363751811072156821e-36,
    -3.4750517101140454257e-37, 5.7216528596733183959e-40,
    3.3684751052532271038e-40, 1.7468822176723675645e-38,
    6.0139025607159129171e-40, 5.5262040875228268232e-40,
    -2.2710189360684579099e-40, 5.0816146129067563777e-41,
    1.7076962371450638107e-40, -4.5434321952193168244e-40,
    -4.0609825420827943968e-40, -1.3412982627444296893e-41,
    5.6130165055227474551e-40, 1.6473833321678301505e-40,
    -7.0858833604277509397e-40, 5.8753244595576709702e-41,
    -2.3859156090426119545e-40, 7.0345607656257674789e-41,
    8.0919491483497672674e-40, -6.8886111924286194012e-40,
    -2.3109134670768076529e-45, 0.0,
    6.9370003276421863698e-45, 1.4424043486572325881e-46,
    2.9601786762547819471e-44, 2.3561944901923449288e-2,
    6.5675173341190412437e-45, 2.5866901733937646716e-43,
    5.6499191390266965769e-44, 1.6250998032110511215e-44,
    -1.3860786841116182618e-44, -1.0529252136132422369e-43,
    2.8420190347390069338e-44, -1.7277572159354892979e-43,
    6.6421440287255975284e-43, 1.0028022924728644824e-42,
    3.9609694630047139805e-44, -5.0566885287910387551e-44,
    -8.4910998040085423168e-44, -8.2017829680429215157e-44,
    -1.1638907957379761614e-43, 3.2667770449572297966e-44,
    -1.2959928187894404257e-43, -7.9678875929551629667e-44,
    2.8680574491841008087e-43, 1.6995082994338189105e-43,
    1.3025400209928922302e-43, 9.9584343284741601558e-43,
    5.0139086269469796567e-43, 1.0290347691615273859e-42,
    2.9740263454703380926e-43, -2.4332426221648417323e-43,
    1.9706115238764346297e-43, 1.9242283641724847298e-44,
    -1.1234579453694473238e-43, -3.4088582567593409374e-43,
    1.6220138967683219084e-43, -1.0987055771846768847e-43,
    9.7367278764666172386e-44, -2.7830832749533398043e-44,
    -2.4517335104302159882e-45, -1.1856554195715406807e-44,
    -4.3102077108406270205e-43, -1.1304345349212086812e-43,
    5.9323102119588654073e-44, -4.8519959327246791081e-43,
    -1.2176076859412709708e-43, 4.0570048540321735232e-44,
    -1.9495770770095707038e-43, 7.4934928922801266819e-44,
    1.3686637922782195357e-43, 3.5034843242929207702e-43,
    1.2711504838782948039e-42, 3.072346883032161428e-43,
    1.5267477752848629615e-43, -7.5598054727431646852e-43,
    -1.1687169903950804141e-42, 4.3151419064311377807e-43,
    -2.040870533732101e-43, -2.4715163501048082995e-42,
    -4.8508323692824245424e-43, -5.05080515235076253e-43,
    5.0984167126752658474e-43, 1.4314463555367229792e-42,
    -7.9932798258703082597e-44, 2.5229703114083945338e-43,
    7.4111065610238408961e-43, 9.1644651097575262937e-44,
    -1.1309603913727413548e-43, 1.2607307121222338585e-42,
    -1.6575802615745515693e-44, 2.2076827293709118045e-43,
    -8.4500966800715772175e-44, 5.8996539417770368243e-43,
    5.3623644156039481879e-43, -3.6483927130048643555e-43,
    1.2896326933207920622e-42, 1.3846580450609598682e-43,
    3.1964824766819028026e-43, -2.2847925661004314239e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
};

inline constexpr double kB3D_1d[] = {
    1.3539430935869281319e-1, 0.0,
    2.0249575812196677744e-43, 5.3988085220666286069,
    4.4773874703965345627e-2, 1.744949688181480509e-42,
    -1.4895713269451560001e-42, -5.5285675974277801724e-3,
    -3.1380408971606464613e-4, -3.6701840219926594069e-42,
    3.1392215964568707271e-42, 1.6758338576829643048e-5,
    8.7708772514942743791e-7, 1.5012574065152727742e-41,
    1.5982227017216236309e-40, -4.5448717320846303969e-8,
    -2.3409400902589991364e-9, -1.7667550671941074028e-41,
    1.6629793488140917768e-41, 1.2008749467401080631e-10,
    6.1422472655564319493e-12, -4.5256013429404733868e-41,
    -1.7145554244492945228e-41, -3.134599480640202629e-13,
    -1.5968567979978649845e-14, 4.9924506103471284371e-41,
    -4.0653720592032289718e-41, 8.1231293785972302639e-16,
    4.127247649335911018e-17, 6.2161994596213855933e-41,
    -4.5783611726479537472e-41, -2.0948753091191026757e-18,
    -1.0623783545987015441e-19, -2.4206389477325137449e-41,
    -7.8668067704305720724e-41, 5.3836109644548354039e-21,
    2.726352770245138517e-22, -4.1788346739318623925e-41,
    5.5885674349832350007e-41, -1.3798683120331719949e-23,
    -6.98020458447045662e-25, -4.8632854395998321424e-41,
    -9.3528416502657937588e-41, 3.5293676883175256867e-26,
    1.7837900349854372718e-27, 2.5926935220879927699e-41,
    -1.4076236441632095819e-42, -9.0120925851409921599e-29,
    -4.5515292999906576412e-30, 5.6166587646328800508e-41,
    -2.6689817157563985791e-41, 2.2980084846586434902e-31,
    1.1598978014016307843e-32, 6.2258736774059876202e-41,
    1.9461162132655007814e-40, -5.8529052776183443981e-34,
    -2.9526919471007374877e-35, 8.8303091299186807871e-41,
    -2.220292559430181711e-40, 1.4895774849295175653e-36,
    7.5113151077644171752e-38, 1.3079606978711413821e-40,
    1.3643567905289237589e-41, -3.7935581186091130025e-39,
    -2.5056153270434024507e-40, 1.4380059884859926326e-40,
    -6.9729667154146600604e-41, 2.2286343424254053302e-41,
    4.0920069156959983128e-41, -1.3398788872069263827e-40,
    -9.2083165772514875151e-41, 5.15158506628147553e-42,
    1.487153067401898816e-40, 5.6172892016361444992e-41,
    -1.401337282593222755e-40, -1.1521621665582362054e-41,
    -3.3340302849554710338e-41, -1.6874033296115635264e-41,
    2.1938327805000122565e-40, -9.1165501920156379725e-41,
    2.259390036822731821e-43, 0.0,
    6.2831853071795864769e-1, 1.1044853763539058282e-43,
    -9.1532517226510187143e-44, 6.2831853071795864769e-2,
    7.6031827239643965236e-42, 5.9238238294313911961e-43,
    -5.8293071614336494506e-43, 4.0880141060232102726e-43,
    -3.4445667876184409625e-42, 1.4807191951377510701e-42,
    5.1790932488284776088e-42, 1.1546557405005028192e-42,
    1.0505884911659234785e-41, -1.3840350900314152636e-41,
    4.3429725221107250541e-42, 7.172471173922760357e-42,
    -3.8812464215636620822e-42, 4.8573753552329261639e-43,
    4.6584538272422495479e-43, 9.415754372886956481e-43,
    -2.573834954348607755e-42, -9.1714320106017342712e-43,
    7.5192452447766758664e-42, -3.2264707579308244615e-42,
    -2.4065199177082245968e-41, -2.6741408689673468095e-41,
    1.4864097351873509776e-41, -1.9378451157363365054e-41,
    -1.8279237817885076282e-41, 9.0237510414945138503e-42,
    -6.5179363754054550285e-43, 3.287150921590465564e-42,
    2.7112322687756560688e-41, -8.081855823786781037e-42,
    -4.413526584538459541e-42, -7.0588173225353135632e-43,
    1.9884425208769154236e-42, 3.080006119998225186e-42,
    -3.4683035659659241222e-42, 1.0108422594269929883e-41,
    -3.5288198577859705889e-42, -9.4245671405916020189e-42,
    -7.5583850852558346705e-42, -3.4801853036350229288e-42,
    -1.0525853414775863428e-41, 8.1410988822387490482e-42,
    3.8019744538956178498e-42, -1.0078620163978977585e-41,
    -1.2633406305120388303e-41, -1.9573150121862980759e-42,
    -7.5979778755253386378e-42, 2.7668494673974738356e-41,
    1.9527094100366325883e-42, 4.6714763024269940926e-42,
    1.5799810040959143049e-41, -3.4884707225010840028e-42,
    8.1177220038336652919e-42, 9.8445035909917462717e-42,
    -1.8117691944720452863e-42, -4.8059795241551698304e-42,
    4.7659562070151353399e-41, -7.9981056638233638758e-42,
    1.0909992879028758448e-41, -4.4149710908788901441e-42,
    -2.8788275651089041905e-41, -3.2395123960826763454e-42,
    5.3738794467776624884e-43, -5.5220354572816434656e-42,
    -1.1530584413696757268e-41, -1.6097002364062249763e-41,
    -4.7840782986174362303e-42, -1.4960674702719599982e-41,
    -3.4720672699808154975e-41, -2.8742536023235790254e-41,
    2.8028412189214743374e-42, 2.769714944109945371e-42,
    -1.2863219253269658303e-41, 4.6537744704327937875e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    1.2868129063839043549e-43, 0.0,
    8.807056571124334078e-1, 2.2452618138581592065e-43,
    -4.68475486266124869e-43, -2.6481337829974647467e-2,
    -1.0617902929702099928e-3, -3.6734698773945974397e-43,
    -1.7955697694080147146e-42, 4.612326856771080221e-5,
    2.0806643025006639846e-6, 2.4486684268047956877e-42,
    6.3838600889224055737e-42, -9.594781788146034689e-8,
    -4.4887020675908788703e-9, -2.471436087099558385e-41,
    5.0606848997126977191e-42, 2.1213777376627330937e-10,
    1.0101704112555697839e-11, 8.3421888105801651446e-43,
    9.7992584545447944981e-43, -4.8384343572530083913e-13,
    -2.328258955484060353e-14, -1.4988630363149142286e-42,
    8.3870385236683890547e-42, 1.124605935990256484e-15,
    5.4492104987098898812e-17, -4.2397404190231570937e-41,
    1.9070219165465720123e-41, -2.6473886101542072632e-18,
    -1.2890977542315909459e-19, 1.3919109493630310802e-41,
    -2.1104896772269452046e-42, 6.289339399813777489e-21,
    3.07374249127118453e-22, -9.7346606994488014714e-42,
    -7.5793284606621891117e-42, -1.504474016472000733e-23,
    -7.373659472349523343e-25, 3.7781404177632992235e-42,
    -4.4330392687885830094e-42, 3.6182685485332920878e-26,
    1.7774008435420819436e-27, -1.2498360581810037334e-41,
    -1.134170161130617293e-41, -8.7396075658021891091e-29,
    -4.3011216651108339371e-30, 1.1642371841525333477e-41,
    5.9672046329763167921e-42, 2.1184642751442650701e-31,
    1.044193048589874055e-32, -4.9432488974994014906e-42,
    -1.7610024356514735967e-41, -5.1503272706164186921e-34,
    -2.5419117509461085768e-35, 9.7789145286652806927e-42,
    2.8004461799608911056e-41, 1.2552645774320165143e-36,
    6.2034430640512943792e-38, 2.4909499113455764187e-41,
    -2.7761289173596214844e-43, -3.0704222363487729203e-39,
    -8.7705869583625975652e-41, -1.80237118011759084e-41,
    1.4998489336427084313e-41, -2.9295917122571596903e-43,
    -4.3391206947817960601e-41, -5.5832699432729924768e-42,
    3.6740019461701905783e-44, -1.4807126625341762097e-41,
    -1.617028362907622659e-41, -2.5235658496228235452e-41,
    -6.1920550727100367117e-42, -2.576101482519923715e-41,
    -5.0152472038185202968e-41, -3.8309008102903345143e-41,
    -1.7195777895362641554e-42, 3.3591204899537412032e-42,
    -1.8979186400815322409e-41, 1.8355120630421683406e-42,
    -5.4158103329345212931e-1, 0.0,
    -6.7634988392898533242e-43, 1.0731616520667231284e+1,
    -7.2111905186524328933e-1, 1.2860179286145793264e-41,
    -1.2988085370309819247e-41, 2.2782808230109470502e-2,
    1.0629577590487734378e-3, -9.86440286357152704e-42,
    2.5335230924421813867e-41, -5.2419768342862014212e-5,
    -2.6260078248605691924e-6, 1.7770560810538835932e-41,
    3.5321974100512096955e-40, 1.3229603108393478217e-7,
    6.6793540881392238175e-9, -5.2676505010112883166e-41,
    4.8162481001754339376e-41, -3.3746824123686847238e-10,
    -1.7051029328829738467e-11, -8.7623566210935990498e-41,
    -1.5720333446066230968e-41, 8.6126926739513228495e-13,
    4.3482613845335455189e-14, 1.0314459313170887056e-40,
    -3.5990368643320274574e-41, -2.1939698252340635002e-15,
    -1.1062414756109424392e-16, 1.5617025545726285714e-40,
    -6.3678162248182783198e-41, 5.5737458113228857633e-18,
    2.8060746048817087211e-19, -6.1694296271669579281e-41,
    -1.6320716600273974668e-40, -1.4115092866034548531e-20,
    -7.0937787452247879492e-22, -6.293561993641417494e-41,
    1.1577389979344895723e-40, 3.5616901412550023874e-23,
    1.7864551679021633294e-24, -1.0812272879136715115e-40,
    -2.1058247432556914942e-40, -8.9506723005466592119e-26,
    -4.4793345132087511674e-27, 3.6819528808436167793e-41,
    2.185423805276382514e-41, 2.2388687444009390459e-28,
    1.1175315452777806336e-29, 1.531124743729206674e-40,
    -7.8376943026588494842e-41, -5.5700723126118083315e-31,
    -2.7719159327786981306e-32, 7.4487346494446840564e-41,
    3.3387842474067988935e-40, 1.37708062552206712e-33,
    6.8285893349770469481e-35, 1.8272977718804951842e-40,
    -3.4298270306432358951e-40, -3.3786516293542171382e-36,
    -1.6680871749674134566e-37, 2.8787286145931582521e-40,
    1.6102683018549359081e-40, 8.2330638257952848831e-39,
    2.7199411029217798234e-40, 2.8579097083039423818e-40,
    -1.0028478785333110889e-40, 4.6236155293426639973e-41,
    6.9192254555412316545e-41, -2.3899988922660089863e-40,
    -2.0169510109184812156e-40, -1.8708561848610296475e-41,
    2.8785860902653840051e-40, 9.1937287775504814939e-41,
    -3.4332083567609784483e-40, 2.2955612491144892074e-41,
    -1.4436039631540899725e-40, 2.7526592354474573346e-41,
    3.9433316004181378337e-40, -3.2717296031949286575e-40,
    -5.2707468066099368772e-45, 0.0,
    2.5398933650058013981e-44, 8.5982867583944438317e-45,
    5.6810117512750037215e-44, 3.1415926535897932385e-2,
    9.8478049893283057838e-45, 3.3945469314040826498e-43,
    9.3549135223245242947e-44, 9.2608732132591212502e-44,
    -5.227101146416015362e-45, -1.5332284555876342248e-43,
    2.7675785827484967975e-44, -2.5621866608639077131e-43,
    9.2313313146877529413e-43, 1.3376390007982846001e-42,
    2.6713742275346468461e-44, -8.7040692217761289061e-44,
    -1.3567923005965445456e-43, -1.05591116617699341e-43,
    -1.6058627726298205398e-43, 3.9323938155115179053e-44,
    -1.9124947228553548153e-43, -1.0591737034132773564e-43,
    4.1624317906105642002e-43, 2.0018079179505169954e-43,
    2.0895261101023024382e-43, 1.3414028148172098116e-42,
    6.5853689870128296593e-43, 1.3884240346838328141e-42,
    3.7557575653385302366e-43, -3.2749769001268943498e-43,
    2.8131540783582844348e-43, 4.038121131129887644e-46,
    -1.4351774334447140005e-43, -4.5740461231724872687e-43,
    2.0283940928599675752e-43, -1.6079899878127275889e-43,
    1.3901905952501984188e-43, -3.2611944426335742621e-44,
    1.2262079965693101219e-44, 4.9643576843551121612e-44,
    -6.0070231497469550707e-43, -1.7622531733507215148e-43,
    7.3740422238543123504e-44, -6.2208893700619847842e-43,
    -1.4649550258116163632e-43, 2.6855659153448681826e-44,
    -2.6876011310598640124e-43, 7.9039730188896601473e-44,
    1.800070396065207412e-43, 4.7130594491402378689e-43,
    1.7164122757267204677e-42, 3.4485079395493545105e-43,
    1.8569981461784031055e-43, -1.0198267125431693691e-42,
    -1.5640696766921137559e-42, 5.5509181389412205727e-43,
    -2.6630652128093349589e-43, -3.2612276771231670837e-42,
    -6.5289373316007429682e-43, -6.4126920973664441208e-43,
    6.5839719815391024405e-43, 1.926359518122748372e-42,
    -9.087084405729678546e-44, 3.7463981210998407041e-43,
    9.790974888877476759e-43, 1.2560123470739040044e-43,
    -1.6196131598728723334e-43, 1.7083579903199926116e-42,
    -3.7719709287947711194e-44, 2.931023673751639253e-43,
    -1.1082875149986137383e-43, 7.4680029420904135814e-43,
    6.8937903138859174648e-43, -4.8113910505675031601e-43,
    1.7312607292587798094e-42, 1.8584720883107886403e-43,
    3.9869718119521250533e-43, -3.0551482035359386718e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
};

inline constexpr double kB3D_2d[] = {
    2.7078861871738562638e-1, 0.0,
    4.0499151624393355488e-43, 1.0797617044133257214e+1,
    8.9547749407930691254e-2, 3.489899376362961018e-42,
    -2.9791426538903120002e-42, -1.1057135194855560345e-2,
    -6.2760817943212929226e-4, -7.3403680439853188137e-42,
    6.2784431929137414542e-42, 3.3516677153659286096e-5,
    1.7541754502988548758e-6, 3.0025148130305455484e-41,
    3.1964454034432472619e-40, -9.0897434641692607937e-8,
    -4.6818801805179982729e-9, -3.5335101343882148056e-41,
    3.3259586976281835536e-41, 2.4017498934802161262e-10,
    1.2284494531112863899e-11, -9.0512026858809467737e-41,
    -3.4291108488985890457e-41, -6.2691989612804052581e-13,
    -3.193713595995729969e-14, 9.9849012206942568743e-41,
    -8.1307441184064579436e-41, 1.6246258757194460528e-15,
    8.2544952986718220359e-17, 1.2432398919242771187e-40,
    -9.1567223452959074943e-41, -4.1897506182382053514e-18,
    -2.1247567091974030881e-19, -4.8412778954650274898e-41,
    -1.5733613540861144145e-40, 1.0767221928909670808e-20,
    5.4527055404902770341e-22, -8.357669347863724785e-41,
    1.1177134869966470001e-40, -2.7597366240663439899e-23,
    -1.396040916894091324e-24, -9.7265708791996642848e-41,
    -1.8705683300531587518e-40, 7.0587353766350513734e-26,
    3.5675800699708745435e-27, 5.1853870441759855397e-41,
    -2.8152472883264191638e-42, -1.802418517028198432e-28,
    -9.1030585999813152823e-30, 1.1233317529265760102e-40,
    -5.3379634315127971583e-41, 4.5960169693172869803e-31,
    2.3197956028032615687e-32, 1.245174735481197524e-40,
    3.8922324265310015627e-40, -1.1705810555236688796e-33,
    -5.9053838942014749754e-35, 1.7660618259837361574e-40,
    -4.4405851188603634221e-40, 2.9791549698590351307e-36,
    1.502263021552883435e-37, 2.6159213957422827642e-40,
    2.7287135810578475178e-41, -7.587116237218226005e-39,
    -5.0112306540868049013e-40, 2.8760119769719852652e-40,
    -1.3945933430829320121e-40, 4.4572686848508106603e-41,
    8.1840138313919966256e-41, -2.6797577744138527654e-40,
    -1.841663315450297503e-40, 1.030317013256295106e-41,
    2.974306134803797632e-40, 1.1234578403272288998e-40,
    -2.80267456518644551e-40, -2.3043243331164724108e-41,
    -6.6680605699109420676e-41, -3.3748066592231270528e-41,
    4.3876655610000245129e-40, -1.8233100384031275945e-40,
    1.1014653122238338632e-43, 0.0,
    9.4247779607693797154e-1, 1.6427150798876105717e-43,
    -5.7424763373250707671e-44, 9.4247779607693797154e-2,
    1.043074028150981647e-41, 7.8102391727777896922e-43,
    -1.1273304470256768989e-42, 9.453098519484631867e-43,
    -5.56630782491425461e-42, 2.9816335342189210704e-42,
    7.9525602966853486537e-42, 1.4215960009028072475e-42,
    1.6331432952473580553e-41, -2.1003826796339625318e-41,
    5.5980095874976572168e-42, 1.0356534101622918036e-41,
    -6.3443787972306092886e-42, 1.3112767055844504597e-43,
    1.2228536997438190167e-42, 1.3197022949795649433e-42,
    -5.0250562930687940163e-42, -1.6291746613250114284e-42,
    1.1249440599414192641e-41, -3.9092439565845581572e-42,
    -3.6194138035045700125e-41, -4.0114565306822770573e-41,
    2.3462726999360674875e-41, -2.893210110962162153e-41,
    -2.7998643966442007486e-41, 1.3019598402754156889e-41,
    -9.013196900051157239e-43, 3.2470662774994306353e-42,
    3.9155782339396201004e-41, -1.201067985853418619e-41,
    -6.2335315006540397999e-42, -2.7519414679007572604e-42,
    4.5472135167340313951e-42, 4.6560926154537018185e-42,
    -5.0486628424892375098e-42, 1.5007790411097002537e-41,
    -3.2762358095914223118e-42, -1.382506180257513123e-41,
    -1.183293663502257484e-41, -4.6951413559468091958e-42,
    -1.6686662113179921681e-41, 1.2649554093459628907e-41,
    6.1089879108815425209e-42, -1.5259461390865272902e-41,
    -1.7091637369369793814e-41, -3.3395464760049944303e-42,
    -1.2135801428603267757e-41, 4.3176417864290060923e-41,
    3.2426046464476267021e-42, 6.3668210554440497374e-42,
    2.349337386256688526e-41, -3.5721674035267177751e-42,
    1.1881609679010123944e-41, 1.4323419584836855407e-41,
    -2.9423870329241604672e-42, -7.0443167166745887398e-42,
    6.9448351891937934035e-41, -1.1959586180660336656e-41,
    1.5955810166960291087e-41, -6.6946235072310632953e-42,
    -4.3555859517376126607e-41, -5.3790627432345013503e-42,
    1.1021062176052669795e-42, -7.4324650180773012364e-42,
    -1.7511326259435076527e-41, -2.5496705590318579505e-41,
    -7.447619025389087653e-42, -2.2946880799700658935e-41,
    -5.2471620996642775221e-41, -4.3215398173517234618e-41,
    3.969894660223885851e-42, 2.2600168923977653766e-42,
    -1.8450896879764866373e-41, 1.4694809751757308657e-42,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    1.2868129063839043549e-43, 0.0,
    8.807056571124334078e-1, 2.2452618138581592065e-43,
    -4.68475486266124869e-43, -2.6481337829974647467e-2,
    -1.0617902929702099928e-3, -3.6734698773945974397e-43,
    -1.7955697694080147146e-42, 4.612326856771080221e-5,
    2.0806643025006639846e-6, 2.4486684268047956877e-42,
    6.3838600889224055737e-42, -9.594781788146034689e-8,
    -4.4887020675908788703e-9, -2.471436087099558385e-41,
    5.0606848997126977191e-42, 2.1213777376627330937e-10,
    1.0101704112555697839e-11, 8.3421888105801651446e-43,
    9.7992584545447944981e-43, -4.8384343572530083913e-13,
    -2.328258955484060353e-14, -1.4988630363149142286e-42,
    8.3870385236683890547e-42, 1.124605935990256484e-15,
    5.4492104987098898812e-17, -4.2397404190231570937e-41,
    1.9070219165465720123e-41, -2.6473886101542072632e-18,
    -1.2890977542315909459e-19, 1.3919109493630310802e-41,
    -2.1104896772269452046e-42, 6.289339399813777489e-21,
    3.07374249127118453e-22, -9.7346606994488014714e-42,
    -7.5793284606621891117e-42, -1.504474016472000733e-23,
    -7.373659472349523343e-25, 3.7781404177632992235e-42,
    -4.4330392687885830094e-42, 3.6182685485332920878e-26,
    1.7774008435420819436e-27, -1.2498360581810037334e-41,
    -1.134170161130617293e-41, -8.7396075658021891091e-29,
    -4.3011216651108339371e-30, 1.1642371841525333477e-41,
    5.9672046329763167921e-42, 2.1184642751442650701e-31,
    1.044193048589874055e-32, -4.9432488974994014906e-42,
    -1.7610024356514735967e-41, -5.1503272706164186921e-34,
    -2.5419117509461085768e-35, 9.7789145286652806927e-42,
    2.8004461799608911056e-41, 1.2552645774320165143e-36,
    6.2034430640512943792e-38, 2.4909499113455764187e-41,
    -2.7761289173596214844e-43, -3.0704222363487729203e-39,
    -8.7705869583625975652e-41, -1.80237118011759084e-41,
    1.4998489336427084313e-41, -2.9295917122571596903e-43,
    -4.3391206947817960601e-41, -5.5832699432729924768e-42,
    3.6740019461701905783e-44, -1.4807126625341762097e-41,
    -1.617028362907622659e-41, -2.5235658496228235452e-41,
    -6.1920550727100367117e-42, -2.576101482519923715e-41,
    -5.0152472038185202968e-41, -3.8309008102903345143e-41,
    -1.7195777895362641554e-42, 3.3591204899537412032e-42,
    -1.8979186400815322409e-41, 1.8355120630421683406e-42,
    -1.0683598174854646876, 0.0,
    4.6567588610146485867e-42, 2.126719220450748245e+1,
    -1.3666824042593402429, 1.9646312805544716988e-41,
    -4.8258589907532668187e-41, 4.5064293165367777131e-2,
    2.1378619038311490708e-3, -1.8991161123377153666e-41,
    3.9295573571252685631e-41, -1.0637512698776602858e-4,
    -5.3593703166199693512e-6, 3.0544316599988919204e-41,
    7.0766808781930812525e-40, 2.7109555562914998509e-7,
    1.3729786652752408746e-8, -9.103669588620827692e-41,
    1.0523513328003893511e-40, -6.9546509659061091867e-10,
    -3.5217812248406444274e-11, -1.8091775654845649858e-40,
    -1.6555966989984227474e-41, 1.7825412836259734731e-12,
    9.0171590967401902599e-14, 2.0433957793669078242e-40,
    -8.0540098526037493895e-41, -4.5586612533623824913e-15,
    -2.3032268585957314231e-16, 2.9472874682506115857e-40,
    -1.0390204857881953273e-40, 1.1629640650953172322e-17,
    5.8684794695196177139e-19, -1.1928340488785147235e-40,
    -3.1164600939774782985e-40, -2.9594691963855239255e-20,
    -1.4915203410034249303e-21, -1.4574850277544682585e-40,
    2.1390763838174347291e-40, 7.5122222509970125061e-23,
    3.7811747014761804699e-24, -2.1251277756221145737e-40,
    -4.0840532264883564101e-40, -1.9019435675238832463e-25,
    -9.5603295088433605974e-27, 8.4499286637248357286e-41,
    3.7573424071234584854e-41, 4.8022247859550024443e-28,
    2.4104313369001916563e-29, 3.0954925488031114191e-40,
    -1.4358112221432037991e-40, -1.2089717501475955916e-30,
    -6.0588642154765574194e-32, 1.3159456416576129962e-40,
    6.7793773493221625722e-40, 3.0339093309199959055e-33,
    1.5178499354715728276e-34, 3.7786198327752698538e-40,
    -6.8464927380686471557e-40, -7.585416446498508512e-36,
    -3.7875905848014271479e-37, 5.737007946898947248e-40,
    3.1227609700488715969e-40, 1.8967409319788125142e-38,
    6.7079380487318801525e-40, 5.604528833734652339e-40,
    -2.1369967446402616261e-40, 6.04373461014080325e-41,
    1.959562332288665053e-40, -4.7337944199903825905e-40,
    -3.9245492773818927485e-40, -6.4377543967189459736e-42,
    5.3543187994034330889e-40, 1.5663643860365995604e-40,
    -6.7849968472432580309e-40, 8.3113537332512990282e-41,
    -2.4280782794896026508e-40, 6.2362623024181644087e-41,
    7.8416933975194719369e-40, -6.7615994997007800074e-40,
    -4.6218269341536153057e-45, 0.0,
    1.387400065528437274e-44, 2.8848086973144651763e-46,
    5.9203573525095638943e-44, 4.7123889803846898577e-2,
    1.3135034668238082487e-44, 5.1733803467875293432e-43,
    1.1299838278053393154e-43, 3.250199606422102243e-44,
    -2.7721573682232365237e-44, -2.1058504272264844739e-43,
    5.6840380694780138676e-44, -3.4555144318709785958e-43,
    1.3284288057451195057e-42, 2.0056045849457289647e-42,
    7.9219389260094279611e-44, -1.011337705758207751e-43,
    -1.6982199608017084634e-43, -1.6403565936085843031e-43,
    -2.3277815914759523227e-43, 6.5335540899144595932e-44,
    -2.5919856375788808514e-43, -1.5935775185910325933e-43,
    5.7361148983682016174e-43, 3.399016598867637821e-43,
    2.6050800419857844604e-43, 1.9916868656948320312e-42,
    1.0027817253893959313e-42, 2.0580695383230547719e-42,
    5.9480526909406761852e-43, -4.8664852443296834646e-43,
    3.9412230477528692593e-43, 3.8484567283449694595e-44,
    -2.2469158907388946477e-43, -6.8177165135186818749e-43,
    3.2440277935366438168e-43, -2.1974111543693537693e-43,
    1.9473455752933234477e-43, -5.5661665499066796086e-44,
    -4.9034670208604319763e-45, -2.3713108391430813614e-44,
    -8.620415421681254041e-43, -2.2608690698424173624e-43,
    1.1864620423917730815e-43, -9.7039918654493582161e-43,
    -2.4352153718825419416e-43, 8.1140097080643470463e-44,
    -3.8991541540191414075e-43, 1.4986985784560253364e-43,
    2.7373275845564390715e-43, 7.0069686485858415405e-43,
    2.5423009677565896078e-42, 6.144693766064322856e-43,
    3.0534955505697259231e-43, -1.511961094548632937e-42,
    -2.3374339807901608282e-42, 8.6302838128622755614e-43,
    -4.0817410674642019999e-43, -4.9430327002096165991e-42,
    -9.7016647385648490847e-43, -1.010161030470152506e-42,
    1.0196833425350531695e-42, 2.8628927110734459584e-42,
    -1.5986559651740616519e-43, 5.0459406228167890677e-43,
    1.4822213122047681792e-42, 1.8328930219515052587e-43,
    -2.2619207827454827097e-43, 2.521461424244467717e-42,
    -3.3151605231491031386e-44, 4.4153654587418236089e-43,
    -1.6900193360143154435e-43, 1.1799307883554073649e-42,
    1.0724728831207896376e-42, -7.296785426009728711e-43,
    2.5792653866415841244e-42, 2.7693160901219197364e-43,
    6.3929649533638056052e-43, -4.5695851322008628477e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    1.2868129063839043549e-43, 0.0,
    8.807056571124334078e-1, 2.2452618138581592065e-43,
    -4.68475486266124869e-43, -2.6481337829974647467e-2,
    -1.0617902929702099928e-3, -3.6734698773945974397e-43,
    -1.7955697694080147146e-42, 4.612326856771080221e-5,
    2.0806643025006639846e-6, 2.4486684268047956877e-42,
    6.3838600889224055737e-42, -9.594781788146034689e-8,
    -4.4887020675908788703e-9, -2.471436087099558385e-41,
    5.0606848997126977191e-42, 2.1213777376627330937e-10,
    1.0101704112555697839e-11, 8.3421888105801651446e-43,
    9.7992584545447944981e-43, -4.8384343572530083913e-13,
    -2.328258955484060353e-14, -1.4988630363149142286e-42,
    8.3870385236683890547e-42, 1.124605935990256484e-15,
    5.4492104987098898812e-17, -4.2397404190231570937e-41,
    1.9070219165465720123e-41, -2.6473886101542072632e-18,
    -1.2890977542315909459e-19, 1.3919109493630310802e-41,
    -2.1104896772269452046e-42, 6.289339399813777489e-21,
    3.07374249127118453e-22, -9.7346606994488014714e-42,
    -7.5793284606621891117e-42, -1.504474016472000733e-23,
    -7.373659472349523343e-25, 3.7781404177632992235e-42,
    -4.4330392687885830094e-42, 3.6182685485332920878e-26,
    1.7774008435420819436e-27, -1.2498360581810037334e-41,
    -1.134170161130617293e-41, -8.7396075658021891091e-29,
    -4.3011216651108339371e-30, 1.1642371841525333477e-41,
    5.9672046329763167921e-42, 2.1184642751442650701e-31,
    1.044193048589874055e-32, -4.9432488974994014906e-42,
    -1.7610024356514735967e-41, -5.1503272706164186921e-34,
    -2.5419117509461085768e-35, 9.7789145286652806927e-42,
    2.8004461799608911056e-41, 1.2552645774320165143e-36,
    6.2034430640512943792e-38, 2.4909499113455764187e-41,
    -2.7761289173596214844e-43, -3.0704222363487729203e-39,
    -8.7705869583625975652e-41, -1.80237118011759084e-41,
    1.4998489336427084313e-41, -2.9295917122571596903e-43,
    -4.3391206947817960601e-41, -5.5832699432729924768e-42,
    3.6740019461701905783e-44, -1.4807126625341762097e-41,
    -1.617028362907622659e-41, -2.5235658496228235452e-41,
    -6.1920550727100367117e-42, -2.576101482519923715e-41,
    -5.0152472038185202968e-41, -3.8309008102903345143e-41,
    -1.7195777895362641554e-42, 3.3591204899537412032e-42,
    -1.8979186400815322409e-41, 1.8355120630421683406e-42,
    -5.5637758860687038551e-1, 0.0,
    3.0917606498282090998e-42, 1.1077549699536502059e+1,
    -7.9668066916691459124e-1, 8.9065475903024074952e-43,
    -2.8509993846098533722e-41, 2.3286509522076712055e-2,
    1.051237490541880516e-3, -9.8263521237207466289e-42,
    3.3463216436671989627e-41, -5.0907384404271849377e-5,
    -2.5207415052930130243e-6, 2.5154034764442644092e-41,
    3.6638794143516751447e-40, 1.2596668195444432331e-7,
    6.3219739612545424425e-9, -5.0484832759401641543e-41,
    5.341090212269492327e-41, -3.1796849551456906699e-10,
    -1.6009706993729804266e-11, -9.3793438850740601268e-41,
    -1.5606686276612399e-41, 8.0648622564332091156e-13,
    4.0632831539714305409e-14, 1.0533712951142863041e-40,
    -4.1508648544022388724e-41, -2.0470686267162299e-15,
    -1.031105208041013241e-16, 1.7542980041844330478e-40,
    -5.9730675447532692646e-41, 5.1921482405556256184e-18,
    2.6135672998347705975e-19, -6.6065730390616093902e-41,
    -1.6370387870841216576e-40, -1.3150374064214806107e-20,
    -6.6136213302282298821e-22, -7.0813665082360646717e-41,
    1.1501995333636698041e-40, 3.324438643987167903e-23,
    1.6701557449245400418e-24, -1.1047770427950512265e-40,
    -2.1134952466765981727e-40, -8.3856610488556373063e-26,
    -4.2076632641404822391e-27, 4.3921432599616926085e-41,
    2.0073215597876076869e-41, 2.1098368742748015062e-28,
    1.057160228654854921e-29, 1.6773596583215176196e-40,
    -7.3935366410094824325e-41, -5.2929188802821423469e-31,
    -2.6478231100845161383e-32, 7.2603141912023563767e-41,
    3.4434297151135620339e-40, 1.3234178375812179893e-33,
    6.6083000600756372793e-35, 1.9336864157106387719e-40,
    -3.4596100124974083206e-40, -3.2957390254820731651e-36,
    -1.6421180185518765335e-37, 3.0312743162191334517e-40,
    1.7154322443266092976e-40, 8.2000993375826785373e-39,
    2.7733783836176632267e-40, 2.8442657044025433649e-40,
    -1.1309319419929794988e-40, 3.2479488561665515174e-41,
    8.4948371220040738367e-41, -2.3940599348523703369e-40,
    -2.0743236829907332914e-40, -2.1336860618892244473e-41,
    2.7414305135254158103e-40, 9.6207060781329119247e-41,
    -3.47781481702377862e-40, 4.7444063734357432672e-41,
    -1.3195599875171894284e-40, 2.8855363948167497403e-41,
    4.0897392486072715352e-40, -3.5705002874041444861e-40,
    -2.3109134670768076529e-45, 0.0,
    6.9370003276421863698e-45, 1.4424043486572325881e-46,
    2.9601786762547819471e-44, 2.3561944901923449288e-2,
    6.5675173341190412437e-45, 2.5866901733937646716e-43,
    5.6499191390266965769e-44, 1.6250998032110511215e-44,
    -1.3860786841116182618e-44, -1.0529252136132422369e-43,
    2.8420190347390069338e-44, -1.7277572159354892979e-43,
    6.6421440287255975284e-43, 1.0028022924728644824e-42,
    3.9609694630047139805e-44, -5.0566885287910387551e-44,
    -8.4910998040085423168e-44, -8.2017829680429215157e-44,
    -1.1638907957379761614e-43, 3.2667770449572297966e-44,
    -1.2959928187894404257e-43, -7.9678875929551629667e-44,
    2.8680574491841008087e-43, 1.6995082994338189105e-43,
    1.3025400209928922302e-43, 9.9584343284741601558e-43,
    5.0139086269469796567e-43, 1.0290347691615273859e-42,
    2.9740263454703380926e-43, -2.4332426221648417323e-43,
    1.9706115238764346297e-43, 1.9242283641724847298e-44,
    -1.1234579453694473238e-43, -3.4088582567593409374e-43,
    1.6220138967683219084e-43, -1.0987055771846768847e-43,
    9.7367278764666172386e-44, -2.7830832749533398043e-44,
    -2.4517335104302159882e-45, -1.1856554195715406807e-44,
    -4.3102077108406270205e-43, -1.1304345349212086812e-43,
    5.9323102119588654073e-44, -4.8519959327246791081e-43,
    -1.2176076859412709708e-43, 4.0570048540321735232e-44,
    -1.9495770770095707038e-43, 7.4934928922801266819e-44,
    1.3686637922782195357e-43, 3.5034843242929207702e-43,
    1.2711504838782948039e-42, 3.072346883032161428e-43,
    1.5267477752848629615e-43, -7.5598054727431646852e-43,
    -1.1687169903950804141e-42, 4.3151419064311377807e-43,
    -2.040870533732101e-43, -2.4715163501048082995e-42,
    -4.8508323692824245424e-43, -5.05080515235076253e-43,
    5.0984167126752658474e-43, 1.4314463555367229792e-42,
    -7.9932798258703082597e-44, 2.5229703114083945338e-43,
    7.4111065610238408961e-43, 9.1644651097575262937e-44,
    -1.1309603913727413548e-43, 1.2607307121222338585e-42,
    -1.6575802615745515693e-44, 2.2076827293709118045e-43,
    -8.4500966800715772175e-44, 5.8996539417770368243e-43,
    5.3623644156039481879e-43, -3.6483927130048643555e-43,
    1.2896326933207920622e-42, 1.3846580450609598682e-43,
    3.1964824766819028026e-43, -2.2847925661004314239e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
};

inline constexpr double kC3D_1d[] = {
    -1.695626851781235821e+1, 0.0,
    -5.8207080257456835051e-41, 3.1675007449629033354e+1,
    2.2656156671913991064e+1, 1.1628897535218512101e-40,
    9.9705751365703161169e-40, -1.3895815428798735606e+1,
    -7.3515473658178374845, -2.1427138580375084142e-40,
    6.0922054971109495604e-41, 3.3709433347608775373,
    1.3669088980668286018, 3.8296542515510657772e-40,
    1.6636497168524362085e-39, -4.9744114739273039792e-1,
    -1.6443374317714050921e-1, -1.3592989178616014123e-42,
    3.3433781350483235957e-40, 4.9873454145178773156e-2,
    1.3998479368136086052e-2, -6.8750682827610961489e-40,
    -3.7296860200300702594e-40, -3.6625164081831051859e-3,
    -8.9882012240835509741e-4, 7.6637398191002988556e-40,
    -5.6034017338066318447e-40, 2.080181678493969024e-4,
    4.561455518082629694e-5, -4.7939316842041109112e-40,
    -1.0026814332855739775e-39, -9.5162607417674873199e-6,
    -1.8956855634034124663e-6, -2.6366610881175481016e-40,
    -3.1293303771823034921e-40, 3.6174448278490273712e-7,
    6.6316344940200517472e-8, -1.5889795268736538905e-40,
    1.0344099765222305314e-39, -1.1709553810769271065e-8,
    -1.99603359474157284e-9, -7.1952904654349751958e-40,
    3.4817658630676629128e-40, 3.2916465677586917449e-10,
    5.2614135215988306504e-11, 8.6466315183238129939e-41,
    5.0328539782500029863e-40, -8.1655976315553767691e-12,
    -1.2324163475266174316e-12, 9.9943110744310801993e-40,
    -6.0748065487690407362e-40, 1.8115121163066081314e-13,
    2.5966829234970977418e-14, 2.7537791471788985628e-39,
    4.4783172992417750401e-40, -3.6343334832458164969e-15,
    -4.9722458659333774314e-16, 1.4589789204370269455e-39,
    -2.1897547787296224821e-39, 6.656712941232080766e-17,
    8.7291347567137835802e-18, 4.53658616165675892e-40,
    3.805212988099228191e-40, -1.1222299760565086705e-18,
    -1.4156641011485061535e-19, 2.1336775409121640229e-39,
    -1.0689736482517902309e-39, 1.7536799239576971455e-20,
    2.1348832060593312646e-21, 1.9984879184427253883e-40,
    7.907845947252803905e-40, -2.5558378430289146813e-22,
    -3.011002121141415394e-23, 6.5871807587290098612e-40,
    2.9401682952039539127e-39, 3.4927995021217449061e-24,
    3.9918271762717336089e-25, -1.9175097999778005032e-39,
    1.3192325273102528306e-39, -4.4971935267234840822e-26,
    2.259390036822731821e-43, 0.0,
    6.2831853071795864769e-1, 1.1044853763539058282e-43,
    -9.1532517226510187143e-44, 6.2831853071795864769e-2,
    7.6031827239643965236e-42, 5.9238238294313911961e-43,
    -5.8293071614336494506e-43, 4.0880141060232102726e-43,
    -3.4445667876184409625e-42, 1.4807191951377510701e-42,
    5.1790932488284776088e-42, 1.1546557405005028192e-42,
    1.0505884911659234785e-41, -1.3840350900314152636e-41,
    4.3429725221107250541e-42, 7.172471173922760357e-42,
    -3.8812464215636620822e-42, 4.8573753552329261639e-43,
    4.6584538272422495479e-43, 9.415754372886956481e-43,
    -2.573834954348607755e-42, -9.1714320106017342712e-43,
    7.5192452447766758664e-42, -3.2264707579308244615e-42,
    -2.4065199177082245968e-41, -2.6741408689673468095e-41,
    1.4864097351873509776e-41, -1.9378451157363365054e-41,
    -1.8279237817885076282e-41, 9.0237510414945138503e-42,
    -6.5179363754054550285e-43, 3.287150921590465564e-42,
    2.7112322687756560688e-41, -8.081855823786781037e-42,
    -4.413526584538459541e-42, -7.0588173225353135632e-43,
    1.9884425208769154236e-42, 3.080006119998225186e-42,
    -3.4683035659659241222e-42, 1.0108422594269929883e-41,
    -3.5288198577859705889e-42, -9.4245671405916020189e-42,
    -7.5583850852558346705e-42, -3.4801853036350229288e-42,
    -1.0525853414775863428e-41, 8.1410988822387490482e-42,
    3.8019744538956178498e-42, -1.0078620163978977585e-41,
    -1.2633406305120388303e-41, -1.9573150121862980759e-42,
    -7.5979778755253386378e-42, 2.7668494673974738356e-41,
    1.9527094100366325883e-42, 4.6714763024269940926e-42,
    1.5799810040959143049e-41, -3.4884707225010840028e-42,
    8.1177220038336652919e-42, 9.8445035909917462717e-42,
    -1.8117691944720452863e-42, -4.8059795241551698304e-42,
    4.7659562070151353399e-41, -7.9981056638233638758e-42,
    1.0909992879028758448e-41, -4.4149710908788901441e-42,
    -2.8788275651089041905e-41, -3.2395123960826763454e-42,
    5.3738794467776624884e-43, -5.5220354572816434656e-42,
    -1.1530584413696757268e-41, -1.6097002364062249763e-41,
    -4.7840782986174362303e-42, -1.4960674702719599982e-41,
    -3.4720672699808154975e-41, -2.8742536023235790254e-41,
    2.8028412189214743374e-42, 2.769714944109945371e-42,
    -1.2863219253269658303e-41, 4.6537744704327937875e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    1.2868129063839043549e-43, 0.0,
    8.807056571124334078e-1, 2.2452618138581592065e-43,
    -4.68475486266124869e-43, -2.6481337829974647467e-2,
    -1.0617902929702099928e-3, -3.6734698773945974397e-43,
    -1.7955697694080147146e-42, 4.612326856771080221e-5,
    2.0806643025006639846e-6, 2.4486684268047956877e-42,
    6.3838600889224055737e-42, -9.594781788146034689e-8,
    -4.4887020675908788703e-9, -2.471436087099558385e-41,
    5.0606848997126977191e-42, 2.1213777376627330937e-10,
    1.0101704112555697839e-11, 8.3421888105801651446e-43,
    9.7992584545447944981e-43, -4.8384343572530083913e-13,
    -2.328258955484060353e-14, -1.4988630363149142286e-42,
    8.3870385236683890547e-42, 1.124605935990256484e-15,
    5.4492104987098898812e-17, -4.2397404190231570937e-41,
    1.9070219165465720123e-41, -2.6473886101542072632e-18,
    -1.2890977542315909459e-19, 1.3919109493630310802e-41,
    -2.1104896772269452046e-42, 6.289339399813777489e-21,
    3.07374249127118453e-22, -9.7346606994488014714e-42,
    -7.5793284606621891117e-42, -1.504474016472000733e-23,
    -7.373659472349523343e-25, 3.7781404177632992235e-42,
    -4.4330392687885830094e-42, 3.6182685485332920878e-26,
    1.7774008435420819436e-27, -1.2498360581810037334e-41,
    -1.134170161130617293e-41, -8.7396075658021891091e-29,
    -4.3011216651108339371e-30, 1.1642371841525333477e-41,
    5.9672046329763167921e-42, 2.1184642751442650701e-31,
    1.044193048589874055e-32, -4.9432488974994014906e-42,
    -1.7610024356514735967e-41, -5.1503272706164186921e-34,
    -2.5419117509461085768e-35, 9.7789145286652806927e-42,
    2.8004461799608911056e-41, 1.2552645774320165143e-36,
    6.2034430640512943792e-38, 2.4909499113455764187e-41,
    -2.7761289173596214844e-43, -3.0704222363487729203e-39,
    -8.7705869583625975652e-41, -1.80237118011759084e-41,
    1.4998489336427084313e-41, -2.9295917122571596903e-43,
    -4.3391206947817960601e-41, -5.5832699432729924768e-42,
    3.6740019461701905783e-44, -1.4807126625341762097e-41,
    -1.617028362907622659e-41, -2.5235658496228235452e-41,
    -6.1920550727100367117e-42, -2.576101482519923715e-41,
    -5.0152472038185202968e-41, -3.8309008102903345143e-41,
    -1.7195777895362641554e-42, 3.3591204899537412032e-42,
    -1.8979186400815322409e-41, 1.8355120630421683406e-42,
    -2.0283798791972012553, 0.0,
    -4.2119603458223813978e-42, 9.7781879850691866171,
    2.1269722504899817316, 1.7210073912270299083e-41,
    1.14316027897684773e-40, -1.6540034422651384624,
    -9.756490235579189172e-1, -3.191416364967775564e-41,
    2.9056842076659288077e-41, 4.961732924179908645e-1,
    2.2271525988036697704e-1, 6.4170997166656096914e-41,
    3.7147114162957285326e-40, -8.9322543798771815066e-2,
    -3.236707701483314061e-2, -2.4693907866909330056e-41,
    7.693645459631124783e-41, 1.0702866211830689975e-2,
    3.2579364879301088843e-3, -1.3377763427836998951e-40,
    -5.0386394950849806045e-41, -9.1988799349414638876e-4,
    -2.4252361174129373284e-4, 1.4290879496575540551e-40,
    -8.8726467087663379006e-41, 6.0049649824930197825e-5,
    1.4034706319496744162e-5, 2.8665003968254114879e-41,
    -1.4188919777748084514e-40, -3.1100479276442478028e-6,
    -6.5601148665954545934e-7, -5.8993522461516293835e-41,
    -1.2326184587796165191e-40, 1.3217658085981894629e-7,
    2.5518222186020288587e-8, -7.4072556392849995699e-41,
    1.7242395819300050436e-40, -4.7338262645308109242e-9,
    -8.4592456963343352207e-10, -1.3643694683015914722e-40,
    -8.4784702428305812586e-41, 1.4594666059163839015e-10,
    2.4360912241716045906e-11, 3.0967719193063584999e-41,
    6.8266192217993435807e-41, -3.9413298352549693258e-12,
    -6.1913289986825862074e-13, 1.9989206862543648451e-40,
    -1.0893749869243878751e-40, 9.4579318924157217971e-14,
    1.4070301853296895837e-14, 3.4082878481701405287e-40,
    2.3614038663740591817e-40, -2.0411730278740464672e-15,
    -2.8910488261971716278e-16, 2.7009025182603709517e-40,
    -4.2355354258951633213e-40, 4.0024011862159422278e-17,
    5.4216332734197528521e-18, 1.9981865464901509836e-40,
    1.1308888117191334702e-40, -7.1929421785831826781e-19,
    -9.3549916917978300032e-20, 3.9225942840194746484e-40,
    -1.9429762651284587518e-40, 1.193734520516209038e-20,
    1.4956938643535609249e-21, -1.1988378999714749389e-40,
    -1.9483046060202031304e-41, -1.8414905802926519081e-22,
    -2.2294068960997473429e-23, 1.3987002600689475634e-40,
    2.0529513799180292582e-40, 2.6557373856710716436e-24,
    3.1147482338262927497e-25, -2.3226653186355996149e-40,
    3.9091174787347676011e-40, -3.5987644592537987541e-26,
    -5.2707468066099368772e-45, 0.0,
    2.5398933650058013981e-44, 8.5982867583944438317e-45,
    5.6810117512750037215e-44, 3.1415926535897932385e-2,
    9.8478049893283057838e-45, 3.3945469314040826498e-43,
    9.3549135223245242947e-44, 9.2608732132591212502e-44,
    -5.227101146416015362e-45, -1.5332284555876342248e-43,
    2.7675785827484967975e-44, -2.5621866608639077131e-43,
    9.2313313146877529413e-43, 1.3376390007982846001e-42,
    2.6713742275346468461e-44, -8.7040692217761289061e-44,
    -1.3567923005965445456e-43, -1.05591116617699341e-43,
    -1.6058627726298205398e-43, 3.9323938155115179053e-44,
    -1.9124947228553548153e-43, -1.0591737034132773564e-43,
    4.1624317906105642002e-43, 2.0018079179505169954e-43,
    2.0895261101023024382e-43, 1.3414028148172098116e-42,
    6.5853689870128296593e-43, 1.3884240346838328141e-42,
    3.7557575653385302366e-43, -3.2749769001268943498e-43,
    2.8131540783582844348e-43, 4.038121131129887644e-46,
    -1.4351774334447140005e-43, -4.5740461231724872687e-43,
    2.0283940928599675752e-43, -1.6079899878127275889e-43,
    1.3901905952501984188e-43, -3.2611944426335742621e-44,
    1.2262079965693101219e-44, 4.9643576843551121612e-44,
    -6.0070231497469550707e-43, -1.7622531733507215148e-43,
    7.3740422238543123504e-44, -6.2208893700619847842e-43,
    -1.4649550258116163632e-43, 2.6855659153448681826e-44,
    -2.6876011310598640124e-43, 7.9039730188896601473e-44,
    1.800070396065207412e-43, 4.7130594491402378689e-43,
    1.7164122757267204677e-42, 3.4485079395493545105e-43,
    1.8569981461784031055e-43, -1.0198267125431693691e-42,
    -1.5640696766921137559e-42, 5.5509181389412205727e-43,
    -2.6630652128093349589e-43, -3.2612276771231670837e-42,
    -6.5289373316007429682e-43, -6.4126920973664441208e-43,
    6.5839719815391024405e-43, 1.926359518122748372e-42,
    -9.087084405729678546e-44, 3.7463981210998407041e-43,
    9.790974888877476759e-43, 1.2560123470739040044e-43,
    -1.6196131598728723334e-43, 1.7083579903199926116e-42,
    -3.7719709287947711194e-44, 2.931023673751639253e-43,
    -1.1082875149986137383e-43, 7.4680029420904135814e-43,
    6.8937903138859174648e-43, -4.8113910505675031601e-43,
    1.7312607292587798094e-42, 1.8584720883107886403e-43,
    3.9869718119521250533e-43, -3.0551482035359386718e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
};

inline constexpr double kC3D_2d[] = {
    -1.6926025681303654926e+1, 0.0,
    -5.254622879862297559e-41, 3.2879897053052142386e+1,
    2.2702816338565004998e+1, 1.2943463725376197305e-40,
    9.98038214371444554e-40, -1.3678984509187904138e+1,
    -7.3351993874108887799, -1.9899861328823980875e-40,
    4.2260115719373843622e-41, 3.3698492341069021596,
    1.3668402886819749612, 3.9058070922030700997e-40,
    1.7299321530279231511e-39, -4.9743701822956988422e-1,
    -1.6443350160981708451e-1, -2.6620331347084582231e-41,
    3.368059407792483532e-40, 4.9873440302598046989e-2,
    1.3998478587356861777e-2, -6.9434947489007514855e-40,
    -3.5493566487297568655e-40, -3.662516364689578989e-3,
    -8.9882012000984361665e-4, 7.4369769375876208538e-40,
    -5.8916703012814776784e-40, 2.0801816771822401591e-4,
    4.5614555173702498873e-5, -4.2741805613756127727e-40,
    -1.0178860108172604965e-39, -9.5162607413828998003e-6,
    -1.8956855633827561868e-6, -2.6839914305572836401e-40,
    -3.2486568863023638551e-40, 3.6174448278379822552e-7,
    6.6316344940141689322e-8, -1.5685511809725438687e-40,
    1.0504842329169238239e-39, -1.1709553810766148641e-8,
    -1.9960335947414076235e-9, -7.3095479855330214449e-40,
    3.246836021939400973e-40, 3.2916465677586045666e-10,
    5.261413521598784765e-11, 1.112185098149684316e-40,
    5.2493419041670926212e-40, -8.1655976315553526726e-12,
    -1.2324163475266161688e-12, 1.0471633729979817429e-39,
    -5.9119397667068994005e-40, 1.8115121163066074709e-13,
    2.5966829234970973969e-14, 2.7597156741342947785e-39,
    5.3563118027936048352e-40, -3.6343334832458163171e-15,
    -4.9722458659333773378e-16, 1.4827515126747170218e-39,
    -2.2710641200863733204e-39, 6.6567129412320807173e-17,
    8.7291347567137835549e-18, 4.6595487455880964416e-40,
    3.9025402197339663633e-40, -1.1222299760565086692e-18,
    -1.4156641011485061528e-19, 2.1794896448918908717e-39,
    -1.0798019289099922433e-39, 1.7536799239576971452e-20,
    2.1348832060593312644e-21, 1.4403519568340280288e-40,
    7.2641766664954860259e-40, -2.5558378430289146814e-22,
    -3.0110021211414153898e-23, 6.9051564439456458307e-40,
    2.8651128313416636963e-39, 3.4927995021217449163e-24,
    3.9918271762717331411e-25, -1.9268292717751416977e-39,
    1.3674604169103866941e-39, -4.4971935267234869389e-26,
    1.1014653122238338632e-43, 0.0,
    9.4247779607693797154e-1, 1.6427150798876105717e-43,
    -5.7424763373250707671e-44, 9.4247779607693797154e-2,
    1.043074028150981647e-41, 7.8102391727777896922e-43,
    -1.1273304470256768989e-42, 9.453098519484631867e-43,
    -5.56630782491425461e-42, 2.9816335342189210704e-42,
    7.9525602966853486537e-42, 1.4215960009028072475e-42,
    1.6331432952473580553e-41, -2.1003826796339625318e-41,
    5.5980095874976572168e-42, 1.0356534101622918036e-41,
    -6.3443787972306092886e-42, 1.3112767055844504597e-43,
    1.2228536997438190167e-42, 1.3197022949795649433e-42,
    -5.0250562930687940163e-42, -1.6291746613250114284e-42,
    1.1249440599414192641e-41, -3.9092439565845581572e-42,
    -3.6194138035045700125e-41, -4.0114565306822770573e-41,
    2.3462726999360674875e-41, -2.893210110962162153e-41,
    -2.7998643966442007486e-41, 1.3019598402754156889e-41,
    -9.013196900051157239e-43, 3.2470662774994306353e-42,
    3.9155782339396201004e-41, -1.201067985853418619e-41,
    -6.2335315006540397999e-42, -2.7519414679007572604e-42,
    4.5472135167340313951e-42, 4.6560926154537018185e-42,
    -5.0486628424892375098e-42, 1.5007790411097002537e-41,
    -3.2762358095914223118e-42, -1.382506180257513123e-41,
    -1.183293663502257484e-41, -4.6951413559468091958e-42,
    -1.6686662113179921681e-41, 1.2649554093459628907e-41,
    6.1089879108815425209e-42, -1.5259461390865272902e-41,
    -1.7091637369369793814e-41, -3.3395464760049944303e-42,
    -1.2135801428603267757e-41, 4.3176417864290060923e-41,
    3.2426046464476267021e-42, 6.3668210554440497374e-42,
    2.349337386256688526e-41, -3.5721674035267177751e-42,
    1.1881609679010123944e-41, 1.4323419584836855407e-41,
    -2.9423870329241604672e-42, -7.0443167166745887398e-42,
    6.9448351891937934035e-41, -1.1959586180660336656e-41,
    1.5955810166960291087e-41, -6.6946235072310632953e-42,
    -4.3555859517376126607e-41, -5.3790627432345013503e-42,
    1.1021062176052669795e-42, -7.4324650180773012364e-42,
    -1.7511326259435076527e-41, -2.5496705590318579505e-41,
    -7.447619025389087653e-42, -2.2946880799700658935e-41,
    -5.2471620996642775221e-41, -4.3215398173517234618e-41,
    3.969894660223885851e-42, 2.2600168923977653766e-42,
    -1.8450896879764866373e-41, 1.4694809751757308657e-42,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    1.2868129063839043549e-43, 0.0,
    8.807056571124334078e-1, 2.2452618138581592065e-43,
    -4.68475486266124869e-43, -2.6481337829974647467e-2,
    -1.0617902929702099928e-3, -3.6734698773945974397e-43,
    -1.7955697694080147146e-42, 4.612326856771080221e-5,
    2.0806643025006639846e-6, 2.4486684268047956877e-42,
    6.3838600889224055737e-42, -9.594781788146034689e-8,
    -4.4887020675908788703e-9, -2.471436087099558385e-41,
    5.0606848997126977191e-42, 2.1213777376627330937e-10,
    1.0101704112555697839e-11, 8.3421888105801651446e-43,
    9.7992584545447944981e-43, -4.8384343572530083913e-13,
    -2.328258955484060353e-14, -1.4988630363149142286e-42,
    8.3870385236683890547e-42, 1.124605935990256484e-15,
    5.4492104987098898812e-17, -4.2397404190231570937e-41,
    1.9070219165465720123e-41, -2.6473886101542072632e-18,
    -1.2890977542315909459e-19, 1.3919109493630310802e-41,
    -2.1104896772269452046e-42, 6.289339399813777489e-21,
    3.07374249127118453e-22, -9.7346606994488014714e-42,
    -7.5793284606621891117e-42, -1.504474016472000733e-23,
    -7.373659472349523343e-25, 3.7781404177632992235e-42,
    -4.4330392687885830094e-42, 3.6182685485332920878e-26,
    1.7774008435420819436e-27, -1.2498360581810037334e-41,
    -1.134170161130617293e-41, -8.7396075658021891091e-29,
    -4.3011216651108339371e-30, 1.1642371841525333477e-41,
    5.9672046329763167921e-42, 2.1184642751442650701e-31,
    1.044193048589874055e-32, -4.9432488974994014906e-42,
    -1.7610024356514735967e-41, -5.1503272706164186921e-34,
    -2.5419117509461085768e-35, 9.7789145286652806927e-42,
    2.8004461799608911056e-41, 1.2552645774320165143e-36,
    6.2034430640512943792e-38, 2.4909499113455764187e-41,
    -2.7761289173596214844e-43, -3.0704222363487729203e-39,
    -8.7705869583625975652e-41, -1.80237118011759084e-41,
    1.4998489336427084313e-41, -2.9295917122571596903e-43,
    -4.3391206947817960601e-41, -5.5832699432729924768e-42,
    3.6740019461701905783e-44, -1.4807126625341762097e-41,
    -1.617028362907622659e-41, -2.5235658496228235452e-41,
    -6.1920550727100367117e-42, -2.576101482519923715e-41,
    -5.0152472038185202968e-41, -3.8309008102903345143e-41,
    -1.7195777895362641554e-42, 3.3591204899537412032e-42,
    -1.8979186400815322409e-41, 1.8355120630421683406e-42,
    -2.327737560701282734, 0.0,
    1.4473241955975120793e-41, 1.5545804499528302252e+1,
    1.8247139570967743954, -3.1653087061798963275e-42,
    8.993126291753645465e-41, -1.6384849731482409285,
    -9.7852394532611896999e-1, -4.5480198974446166163e-42,
    5.3742211407845349594e-41, 4.9650049831611128893e-1,
    2.2274083921610527397e-1, 6.5016092799012358628e-41,
    5.5197047210285879821e-40, -8.9324286028792715241e-2,
    -3.2367187405490708028e-2, -5.4005656484497939902e-41,
    1.0108483828777159943e-40, 1.0702872901142968723e-2,
    3.2579368811768668635e-3, -1.8178176542428642081e-40,
    -5.0413594700481534534e-41, -9.1988801611020513978e-4,
    -2.4252361302051865213e-4, 1.7905772775402262543e-40,
    -1.177355056434795695e-40, 6.0049649896349478126e-5,
    1.4034706323442463594e-5, 1.2633500909985716576e-40,
    -1.6550810195966812059e-40, -3.1100479278603645784e-6,
    -6.5601148667129750743e-7, -9.1635791610855236181e-41,
    -2.1342127177817659545e-40, 1.3217658086045409349e-7,
    2.5518222186054434947e-8, -1.1299119609951631784e-40,
    2.2132068233888026889e-40, -4.7338262645326382825e-9,
    -8.4592456963353092162e-10, -1.7643306748094724505e-40,
    -1.8521077255328947984e-40, 1.459466605916435632e-10,
    2.4360912241716319786e-11, 5.2332894422968232061e-41,
    6.8275188559020641845e-41, -3.941329835254983785e-12,
    -6.1913289986825938215e-13, 2.7003502074075513292e-40,
    -1.4703017553044054833e-40, 9.4579318924157257973e-14,
    1.4070301853296897934e-14, 4.0396522097129451081e-40,
    4.3854711093722608033e-40, -2.0411730278740465769e-15,
    -2.8910488261971716851e-16, 3.6722289452200663019e-40,
    -6.0574861265870742536e-40, 4.0024011862159422577e-17,
    5.4216332734197528677e-18, 3.3969328305506089259e-40,
    1.9561298620262785287e-40, -7.1929421785831826862e-19,
    -9.3549916917978300074e-20, 5.5790954546229150201e-40,
    -2.5712295255087419514e-40, 1.1937345205162090382e-20,
    1.4956938643535609251e-21, -2.3885594881463150145e-40,
    -1.3355144083266231787e-40, -1.8414905802926519082e-22,
    -2.2294068960997473256e-23, 1.5862842369931421986e-40,
    3.1371079480545857198e-42, 2.655737385671071636e-24,
    3.1147482338262918183e-25, -2.1225760366337519193e-40,
    6.3056598361055519159e-40, -3.5987644592538108218e-26,
    -4.6218269341536153057e-45, 0.0,
    1.387400065528437274e-44, 2.8848086973144651763e-46,
    5.9203573525095638943e-44, 4.7123889803846898577e-2,
    1.3135034668238082487e-44, 5.1733803467875293432e-43,
    1.1299838278053393154e-43, 3.250199606422102243e-44,
    -2.7721573682232365237e-44, -2.1058504272264844739e-43,
    5.6840380694780138676e-44, -3.4555144318709785958e-43,
    1.3284288057451195057e-42, 2.0056045849457289647e-42,
    7.9219389260094279611e-44, -1.011337705758207751e-43,
    -1.6982199608017084634e-43, -1.6403565936085843031e-43,
    -2.3277815914759523227e-43, 6.5335540899144595932e-44,
    -2.5919856375788808514e-43, -1.5935775185910325933e-43,
    5.7361148983682016174e-43, 3.399016598867637821e-43,
    2.6050800419857844604e-43, 1.9916868656948320312e-42,
    1.0027817253893959313e-42, 2.0580695383230547719e-42,
    5.9480526909406761852e-43, -4.8664852443296834646e-43,
    3.9412230477528692593e-43, 3.8484567283449694595e-44,
    -2.2469158907388946477e-43, -6.8177165135186818749e-43,
    3.2440277935366438168e-43, -2.1974111543693537693e-43,
    1.9473455752933234477e-43, -5.5661665499066796086e-44,
    -4.9034670208604319763e-45, -2.3713108391430813614e-44,
    -8.620415421681254041e-43, -2.2608690698424173624e-43,
    1.1864620423917730815e-43, -9.7039918654493582161e-43,
    -2.4352153718825419416e-43, 8.1140097080643470463e-44,
    -3.8991541540191414075e-43, 1.4986985784560253364e-43,
    2.7373275845564390715e-43, 7.0069686485858415405e-43,
    2.5423009677565896078e-42, 6.144693766064322856e-43,
    3.0534955505697259231e-43, -1.511961094548632937e-42,
    -2.3374339807901608282e-42, 8.6302838128622755614e-43,
    -4.0817410674642019999e-43, -4.9430327002096165991e-42,
    -9.7016647385648490847e-43, -1.010161030470152506e-42,
    1.0196833425350531695e-42, 2.8628927110734459584e-42,
    -1.5986559651740616519e-43, 5.0459406228167890677e-43,
    1.4822213122047681792e-42, 1.8328930219515052587e-43,
    -2.2619207827454827097e-43, 2.521461424244467717e-42,
    -3.3151605231491031386e-44, 4.4153654587418236089e-43,
    -1.6900193360143154435e-43, 1.1799307883554073649e-42,
    1.0724728831207896376e-42, -7.296785426009728711e-43,
    2.5792653866415841244e-42, 2.7693160901219197364e-43,
    6.3929649533638056052e-43, -4.5695851322008628477e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    1.2868129063839043549e-43, 0.0,
    8.807056571124334078e-1, 2.2452618138581592065e-43,
    -4.68475486266124869e-43, -2.6481337829974647467e-2,
    -1.0617902929702099928e-3, -3.6734698773945974397e-43,
    -1.7955697694080147146e-42, 4.612326856771080221e-5,
    2.0806643025006639846e-6, 2.4486684268047956877e-42,
    6.3838600889224055737e-42, -9.594781788146034689e-8,
    -4.4887020675908788703e-9, -2.471436087099558385e-41,
    5.0606848997126977191e-42, 2.1213777376627330937e-10,
    1.0101704112555697839e-11, 8.3421888105801651446e-43,
    9.7992584545447944981e-43, -4.8384343572530083913e-13,
    -2.328258955484060353e-14, -1.4988630363149142286e-42,
    8.3870385236683890547e-42, 1.124605935990256484e-15,
    5.4492104987098898812e-17, -4.2397404190231570937e-41,
    1.9070219165465720123e-41, -2.6473886101542072632e-18,
    -1.2890977542315909459e-19, 1.3919109493630310802e-41,
    -2.1104896772269452046e-42, 6.289339399813777489e-21,
    3.07374249127118453e-22, -9.7346606994488014714e-42,
    -7.5793284606621891117e-42, -1.504474016472000733e-23,
    -7.373659472349523343e-25, 3.7781404177632992235e-42,
    -4.4330392687885830094e-42, 3.6182685485332920878e-26,
    1.7774008435420819436e-27, -1.2498360581810037334e-41,
    -1.134170161130617293e-41, -8.7396075658021891091e-29,
    -4.3011216651108339371e-30, 1.1642371841525333477e-41,
    5.9672046329763167921e-42, 2.1184642751442650701e-31,
    1.044193048589874055e-32, -4.9432488974994014906e-42,
    -1.7610024356514735967e-41, -5.1503272706164186921e-34,
    -2.5419117509461085768e-35, 9.7789145286652806927e-42,
    2.8004461799608911056e-41, 1.2552645774320165143e-36,
    6.2034430640512943792e-38, 2.4909499113455764187e-41,
    -2.7761289173596214844e-43, -3.0704222363487729203e-39,
    -8.7705869583625975652e-41, -1.80237118011759084e-41,
    1.4998489336427084313e-41, -2.9295917122571596903e-43,
    -4.3391206947817960601e-41, -5.5832699432729924768e-42,
    3.6740019461701905783e-44, -1.4807126625341762097e-41,
    -1.617028362907622659e-41, -2.5235658496228235452e-41,
    -6.1920550727100367117e-42, -2.576101482519923715e-41,
    -5.0152472038185202968e-41, -3.8309008102903345143e-41,
    -1.7195777895362641554e-42, 3.3591204899537412032e-42,
    -1.8979186400815322409e-41, 1.8355120630421683406e-42,
    -1.2380767995405027233, 0.0,
    -2.8901035553972512196e-42, 9.2570626335613782525,
    8.3833541284513115764e-1, 6.3947289354152270594e-42,
    4.9670529061433237385e-41, -8.1553210903858012205e-1,
    -4.890759876555086808e-1, -1.3852105124862150564e-41,
    1.6697808747905733108e-41, 2.4824092654257990278e-1,
    1.1136995230608860745e-1, 4.614098521094755592e-41,
    3.3348361672283365171e-40, -4.466211959059150864e-2,
    -1.6183592528612403936e-2, -3.9346757558663290366e-41,
    5.422972125932633898e-41, 5.3514363917173317872e-3,
    1.6289684376383320186e-3, -1.0309460551492196508e-40,
    -3.3174614142514652564e-41, -4.5994400790722688114e-4,
    -1.2126180650284696416e-4, 1.2014099424575888747e-40,
    -5.6411695021334375114e-41, 3.0024824947803189761e-5,
    7.0173531617026076546e-6, 7.3807835664452441593e-41,
    -1.0122862791259562617e-40, -1.5550239639292487423e-6,
    -3.2800574333560195909e-7, -5.0428916217490905589e-41,
    -1.2523879526757919505e-40, 6.6088290430224701136e-8,
    1.2759111093027099898e-8, -7.1068189505074837289e-41,
    1.2507649201143274499e-40, -2.3669131322663132477e-9,
    -4.2296228481676516539e-10, -1.0149564842430907543e-40,
    -1.1704159572574886384e-40, 7.297333029582176679e-11,
    1.2180456120858159151e-11, 2.5218998968043429321e-41,
    3.021415750393312997e-41, -1.9706649176274918553e-12,
    -3.0956644993412968921e-13, 1.6518643958949904483e-40,
    -7.4923963164200456986e-41, 4.7289659462078628893e-14,
    7.0351509266484489625e-15, 2.0615021988023794628e-40,
    2.6018540609471126103e-40, -1.0205865139370232882e-15,
    -1.4455244130985858424e-16, 2.0533029067807301598e-40,
    -3.6108431794463397089e-40, 2.0012005931079711288e-17,
    2.7108166367098764338e-18, 2.2442552503200810416e-40,
    1.284225068749113317e-40, -3.5964710892915913431e-19,
    -4.6774958458989150037e-20, 3.088192824743954776e-40,
    -1.527460628433400879e-40, 5.9686726025810451909e-21,
    7.4784693217678046255e-22, -1.5111077535375282596e-40,
    -8.4397100715293316275e-41, -9.2074529014632595409e-23,
    -1.1147034480498736594e-23, 9.9857838777516486076e-41,
    -4.8210896920682299092e-41, 1.3278686928355358289e-24,
    1.5573741169131458197e-25, -8.9479799851083772741e-41,
    3.7848380599807152808e-40, -1.799382229626911904e-26,
    -2.3109134670768076529e-45, 0.0,
    6.9370003276421863698e-45, 1.4424043486572325881e-46,
    2.9601786762547819471e-44, 2.3561944901923449288e-2,
    6.5675173341190412437e-45, 2.5866901733937646716e-43,
    5.6499191390266965769e-44, 1.6250998032110511215e-44,
    -1.3860786841116182618e-44, -1.0529252136132422369e-43,
    2.8420190347390069338e-44, -1.7277572159354892979e-43,
    6.6421440287255975284e-43, 1.0028022924728644824e-42,
    3.9609694630047139805e-44, -5.0566885287910387551e-44,
    -8.4910998040085423168e-44, -8.2017829680429215157e-44,
    -1.1638907957379761614e-43, 3.2667770449572297966e-44,
    -1.2959928187894404257e-43, -7.9678875929551629667e-44,
    2.8680574491841008087e-43, 1.6995082994338189105e-43,
    1.3025400209928922302e-43, 9.9584343284741601558e-43,
    5.0139086269469796567e-43, 1.0290347691615273859e-42,
    2.9740263454703380926e-43, -2.4332426221648417323e-43,
    1.9706115238764346297e-43, 1.9242283641724847298e-44,
    -1.1234579453694473238e-43, -3.4088582567593409374e-43,
    1.6220138967683219084e-43, -1.0987055771846768847e-43,
    9.7367278764666172386e-44, -2.7830832749533398043e-44,
    -2.4517335104302159882e-45, -1.1856554195715406807e-44,
    -4.3102077108406270205e-43, -1.1304345349212086812e-43,
    5.9323102119588654073e-44, -4.8519959327246791081e-43,
    -1.2176076859412709708e-43, 4.0570048540321735232e-44,
    -1.9495770770095707038e-43, 7.4934928922801266819e-44,
    1.3686637922782195357e-43, 3.5034843242929207702e-43,
    1.2711504838782948039e-42, 3.072346883032161428e-43,
    1.5267477752848629615e-43, -7.5598054727431646852e-43,
    -1.1687169903950804141e-42, 4.3151419064311377807e-43,
    -2.040870533732101e-43, -2.4715163501048082995e-42,
    -4.8508323692824245424e-43, -5.05080515235076253e-43,
    5.0984167126752658474e-43, 1.4314463555367229792e-42,
    -7.9932798258703082597e-44, 2.5229703114083945338e-43,
    7.4111065610238408961e-43, 9.1644651097575262937e-44,
    -1.1309603913727413548e-43, 1.2607307121222338585e-42,
    -1.6575802615745515693e-44, 2.2076827293709118045e-43,
    -8.4500966800715772175e-44, 5.8996539417770368243e-43,
    5.3623644156039481879e-43, -3.6483927130048643555e-43,
    1.2896326933207920622e-42, 1.3846580450609598682e-43,
    3.1964824766819028026e-43, -2.2847925661004314239e-43,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
    0.0, 0.0,
};

// (A2D viscous rhs - B3D viscous rhs) / rho per unit exp(-t); [component][mode][cos, sin].
inline constexpr double kStressDiff_1d[] = {
    3.8295293712640369093e-1, 0.0,
    -4.9451699699458945045e-42, -7.6590587425280738186,
    5.0991096130878994624e-1, -5.756463505142558451e-42,
    1.8418829381643020126e-41, -1.6110999192574038493e-2,
    -7.5173123222114342819e-4, 5.9930757962724361592e-42,
    -1.4476732189953622549e-41, 3.707731324810795615e-5,
    1.8578523967807889404e-6, -1.9214945752906345068e-41,
    -2.5830683799891874516e-40, -9.3629513128792483131e-8,
    -4.7294740335930962426e-9, 3.5860135499051445067e-41,
    -4.165924916512352578e-41, 2.3911109502618885156e-10,
    1.2091985695026378602e-11, 6.321944203370985423e-41,
    6.6613968002448908321e-42, -6.114699329192221632e-13,
    -3.091494499556199554e-14, -7.0348299085630197976e-41,
    3.1173559467967376878e-41, 1.5625999874517866079e-15,
    7.8958836099675481367e-17, -1.0732270565057838291e-40,
    3.8888326873344942405e-41, -3.9886338714530773592e-18,
    -2.0142808110074056521e-19, 4.3965020628566362886e-41,
    1.1837245788049096856e-40, 1.01693394844924783e-20,
    5.132726254892095348e-22, 5.1339873212024498297e-41,
    -7.8598425487461689424e-41, -2.5899556848082455591e-23,
    -1.3065672532497204557e-24, 7.4510657441385013455e-41,
    1.4253237671335723111e-40, 6.5898054085584846566e-26,
    3.3229262259099888252e-27, -3.1341094266397780762e-41,
    -1.2599874176342800821e-41, -1.6752578432659557119e-28,
    -8.4442420640401442303e-30, -1.1056419327753756925e-40,
    5.1553920353801139981e-41, 4.2556174695643512039e-31,
    2.1443312131363434666e-32, -4.3795638880565771106e-41,
    -2.4467321838241855402e-40, -1.0803207075749926561e-33,
    -5.4418553220005692843e-35, -1.3549136855398894681e-40,
    2.4305341232823464846e-40, 2.7403738139200262929e-36,
    1.3798380612969992833e-37, -2.0958794104659222511e-40,
    -1.0481887288567716827e-40, -6.9609006413117599109e-39,
    -2.4772503669293352097e-40, -2.0056744837449553222e-40,
    7.7911234744287613857e-41, -2.0104031109445734175e-41,
    -4.6361372614823455985e-41, 1.6994609251021691454e-40,
    1.3940137963704794328e-40, 7.7240407426669062648e-42,
    -2.0834336059677285621e-40, -6.4360814594596246285e-41,
    2.4232780374259857607e-40, -3.2480650314571524285e-41,
    9.2398200231988041146e-41, -2.2759225193132701663e-41,
    -2.8678057265018430416e-40, 2.463648180489742477e-40,
};

// (A2D viscous rhs - B3D viscous rhs) / rho per unit exp(-t); [component][mode][cos, sin].
inline constexpr double kStressDiff_2d[] = {
    6.2744670487646718908e-1, 0.0,
    -5.2011977648666276693e-42, -1.2548934097529343782e+1,
    8.2389225854652657163e-1, -1.7619817786865885238e-41,
    2.8050066816342446535e-41, -2.6421744207951982876e-2,
    -1.2401282956977448033e-3, 1.0010454424364754137e-41,
    -2.5982184131252776071e-41, 6.1360643717777263307e-5,
    3.0808003183688074377e-6, -2.6045096791687058257e-41,
    -4.2039515627571388569e-40, -1.5547886771385722298e-7,
    -7.8617880083226341345e-9, 6.0904332081385246398e-41,
    -7.2185667799029294077e-41, 3.9779320978838803921e-10,
    2.0129612171496600544e-11, 1.0782886647989234488e-40,
    1.6964975121212289377e-41, -1.0184588828274651081e-12,
    -5.1514632387391038835e-14, -1.2220474751481474126e-40,
    4.8943070619394013919e-41, 2.6048061413354491312e-15,
    1.3166537929974697929e-16, -1.7926823966060239761e-40,
    6.8859043433441830049e-41, -6.653045787980540978e-18,
    -3.3606814355512252987e-19, 8.0049738779583789271e-41,
    2.0165615985686903992e-40, 1.6970673882536676989e-20,
    8.5672891119180704856e-22, 6.6028885588145905939e-41,
    -1.3523854063743462359e-40, -4.3238252878812934716e-23,
    -2.181628477642745804e-24, 1.1786148525896887484e-40,
    2.339633136689891074e-40, 1.1004962627165725825e-25,
    5.5500665785425866847e-27, -4.2289485808235520396e-41,
    -2.2218647930489733838e-41, -2.798439352671900248e-28,
    -1.4107415619154192539e-29, -1.9171813582614893486e-40,
    8.6913303608009330387e-41, 7.110468184562914927e-31,
    3.5832160643492082204e-32, -8.5692005195537633512e-41,
    -3.8517638731918943632e-40, -1.8054122095584021394e-33,
    -9.0951651549786404834e-35, -2.2775615739123123266e-40,
    3.9540860871745568532e-40, 4.5804780848621281964e-36,
    2.3065493274509823737e-37, -3.3503228725602625447e-40,
    -1.7621701110433924111e-40, -1.1654256606554370842e-38,
    -4.1260665450986519449e-40, -3.2953442436663306961e-40,
    1.3467966203658944825e-40, -7.915475287056150197e-42,
    -1.0497077868359047517e-40, 2.7568924954806285281e-40,
    2.243166807652853455e-40, -6.607336261674861736e-42,
    -3.1621441482444535632e-40, -9.0359488818809306519e-41,
    4.1005261310387284355e-40, -3.8034601593010274682e-41,
    1.4470595768816919888e-40, -4.2700577232180550262e-41,
    -4.6279125252469035938e-40, 3.9154397929317890626e-40,
    5.2141210650274388371e-1, 0.0,
    -8.9392681066659465771e-42, -1.0428242130054877674e+1,
    7.058406253798432671e-1, -8.0433505298674443697e-42,
    3.1970836107290991883e-41, -2.1911253369770132603e-2,
    -1.0150654009656854813e-3, 4.0899788152014606886e-42,
    -2.2274084349742761567e-41, 4.9871296026546605141e-5,
    2.4927568719735593835e-6, -2.0036225539423586479e-41,
    -3.5658526646359983088e-40, -1.2540967167252022642e-7,
    -6.3266340924566545934e-9, 4.7713035279369453437e-41,
    -4.9323865997137361012e-41, 3.1954007529017851548e-10,
    1.6146344913582535262e-11, 9.0472668549192689501e-41,
    2.3870536428675661135e-41, -8.1595091593020138154e-13,
    -4.1230202599294947786e-14, -9.9646963498948841916e-41,
    3.1547984338599886385e-41, 2.0829938210199106926e-15,
    1.0521112899927946481e-16, -1.5248094057211997428e-40,
    4.8257155292105588262e-41, -5.3128558263786910995e-18,
    -2.6821609974709916577e-19, 6.2820292678707266687e-41,
    1.7865656017316407671e-40, 1.3537344570940757911e-20,
    6.8308896527582155582e-22, 5.7249048337569752049e-41,
    -1.0910465645733182881e-40, -3.4460417665434432095e-23,
    -1.738073282106415556e-24, 1.0269973432081755334e-40,
    1.8892265103402255093e-40, 8.7644535985097276746e-26,
    4.418712099187331858e-27, -3.1370127707389580214e-41,
    -1.6971062675148887159e-41, -2.227334177126049088e-28,
    -1.1225310572947109625e-29, -1.484789243864510877e-40,
    6.6167792785635695901e-41, 5.6563842242987289031e-31,
    2.8497775786460252092e-32, -7.2090469969414096563e-41,
    -3.312821954731476182e-40, -1.4355499057579108481e-33,
    -7.2304006557591975224e-35, -1.8190730357553889143e-40,
    3.3200561038069953799e-40, 3.6406331498399365402e-36,
    1.8328542659652109616e-37, -2.767029569452752438e-40,
    -1.4471921165173021785e-40, -9.2728258410445401726e-39,
    -3.2795083003757661013e-40, -2.7582811234566994924e-40,
    1.096086222295679155e-40, -5.8370752656246803299e-42,
    -8.8707927330974765868e-41, 2.155734155394981157e-40,
    1.8224827310117655374e-40, -3.3948813547501388067e-42,
    -2.6665339877126811628e-40, -8.0049945812203892127e-41,
    3.3592680010631010487e-40, -2.2121599811949565549e-41,
    1.0976518711030369093e-40, -2.583493726465332107e-41,
    -3.8407207614675430009e-40, 3.4505055839338836319e-40,
};

}  // namespace degvisc::manufactured_tables
