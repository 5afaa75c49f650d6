"""Riemann-Siegel correction polynomials C_0..C_4 in z = 2p - 1.

Generated by tools/gen_rs_coefficients.py; do not edit by hand.
Coefficients are in increasing powers of z.
"""

# degree 46, max |C0| on [-1, 1] = 0.92387953
_C0 = (
    0.38268343236508977173,
    0.0,
    0.43724046807752044936,
    0.0,
    0.13237657548034352332,
    0.0,
    -0.013605026047674188655,
    -5.5204886819597862611e-124,
    -0.013567621970103580888,
    1.1517645494753444848e-122,
    -0.0016237253231444652829,
    6.1429849297062281147e-122,
    0.00029705353733379690783,
    2.5460837030996192982e-121,
    0.00007943300879521469588,
    1.0223797671679738659e-120,
    4.6556124614504505037e-7,
    4.0911830442055810461e-120,
    -1.4327251630955105754e-6,
    1.6365453488196473837e-119,
    -1.0354847112312946075e-7,
    6.5462133101778962829e-119,
    1.2357927083861738056e-8,
    2.618486742591423638e-118,
    1.7881083857954904986e-9,
    1.0473947600881035873e-117,
    -3.3914143899270359069e-11,
    4.1895790683743030057e-117,
    -1.6326633902565905101e-11,
    1.6758316285951010842e-116,
    -3.7851093185412203829e-13,
    6.703326514933900188e-116,
    9.3274232592017248457e-14,
    2.6813306059981597994e-115,
    5.2218430159781368553e-15,
    1.0725322424003572395e-114,
    -3.3506730727442637895e-16,
    4.2901289696019148776e-114,
    -3.4124265228117264941e-17,
    1.7160515878407875474e-113,
    5.7512033414323991603e-19,
    6.8642063513631597882e-113,
    1.4895301363211505455e-19,
    2.7456825405452643419e-112,
    1.2565372717021416853e-21,
    1.0982730162181057557e-111,
    -4.721295250143425669e-22,
)

# degree 47, max |C1| on [-1, 1] = 0.030597306
_C1 = (
    0.0,
    -0.02682510262837534703,
    0.0,
    0.01378477342635185305,
    9.7884928319551572439e-124,
    0.038491250482235082229,
    -4.9013221920652838717e-122,
    0.009871066299062076472,
    -5.1349196594427445296e-121,
    -0.0033107597608584043329,
    -3.6890026666424349405e-120,
    -0.0014647808577954150825,
    -2.356643565217687496e-119,
    -0.000013207940624876963675,
    -1.4093799290236653643e-118,
    0.000059227487018471413232,
    -8.0338196880069686501e-118,
    5.9802425853734485877e-6,
    -4.4107460384002955649e-117,
    -9.6413224561698263527e-7,
    -2.3493038994640779992e-116,
    -1.833473372271441176e-7,
    -1.2204176835784541406e-115,
    4.4670875627178335996e-9,
    -6.2082117362486395601e-115,
    2.7096350821772743217e-9,
    -3.102195651433921023e-114,
    7.7852886543158510463e-11,
    -1.5264772254347965102e-113,
    -2.3437626010893688532e-11,
    -7.4113101152824549662e-113,
    -1.5830172789987521642e-12,
    -3.5562334827399644374e-112,
    1.2119941573723791247e-13,
    -1.6887354720178856164e-111,
    1.4583781161108307018e-14,
    -7.9450983159699618409e-111,
    -2.8786305258131917505e-16,
    -3.7069591004810115616e-110,
    -8.6628629021237241225e-17,
    -1.7166072142227456206e-109,
    -8.4307227271370412716e-19,
    -7.8951969434634991581e-109,
    3.6308072230973462002e-19,
    -3.6087559813463182267e-108,
    1.1626698212838296719e-20,
    -1.6401534431162397046e-107,
    -1.0975486711527531816e-21,
)

# degree 50, max |C2| on [-1, 1] = 0.0051906608
_C2 = (
    0.0051885428302931684938,
    -9.9178167980823540638e-125,
    0.00030946583880634746033,
    2.4830388295625607454e-122,
    -0.011335941078229373382,
    7.2823976553178905858e-121,
    0.0022330457419581447721,
    1.1218474915952912599e-119,
    0.0051966374088623302051,
    1.3137064449518723184e-118,
    0.00034399144076208336695,
    1.2997319106640183861e-117,
    -0.00059106484274705828217,
    1.1397305281468615704e-116,
    -0.00010229972547935857454,
    9.1175056808365029926e-116,
    0.000020888392216992755408,
    6.7843306103554420024e-115,
    5.9276654930965359579e-6,
    4.7608594315672999879e-114,
    -1.6423838362436275978e-7,
    3.1829421124906582161e-113,
    -1.5161199700940682862e-7,
    2.043107675635899118e-112,
    -5.9078036982066679629e-9,
    1.266720709972194551e-111,
    2.0911514859478188978e-9,
    7.6219517112930474834e-111,
    1.7815649583292351054e-10,
    4.4680296215278854519e-110,
    -1.6164072455353830753e-11,
    2.5597438967684546326e-109,
    -2.3806962496667615707e-12,
    1.4369451588177700232e-108,
    5.3982652955425949182e-14,
    7.9213027599922965261e-108,
    1.9750142196969515273e-14,
    4.2960543723414280643e-107,
    2.3332868732882634831e-16,
    2.2958656360486265324e-106,
    -1.1187517610048080208e-16,
    1.2106485286087561569e-105,
    -4.1640094888837671885e-18,
    6.3066316083223021867e-105,
    4.4460811092918830289e-19,
    3.2488697491299477567e-104,
    2.8546114783637144546e-20,
    1.6565925252000817596e-103,
    -1.1913231430037894305e-21,
    8.3674807833205223139e-103,
    -1.2981634360736498947e-22,
)

# degree 51, max |C3| on [-1, 1] = 0.00031738171
_C3 = (
    -4.1930738873527275905e-124,
    -0.0013397160907194569043,
    -1.2288263910558388362e-121,
    0.0037442151363793937047,
    -6.6423645177934004744e-120,
    -0.001330317891932146812,
    -1.8657945226433787054e-118,
    -0.0022654660765471787115,
    -3.6241487979650056326e-117,
    0.00095484999985067304151,
    -5.506987109423444781e-116,
    0.00060100384589636039121,
    -7.0075141602298641382e-115,
    -0.00010128858286776621953,
    -7.7920392613562518608e-114,
    -0.000068657334492998256425,
    -7.7914536332323848336e-113,
    5.9853667915385981593e-7,
    -7.1494541772605095954e-112,
    3.331659851239947129e-6,
    -6.1107000337149708784e-111,
    2.1919289102435081057e-7,
    -4.920191149463908868e-110,
    -7.8908842456814944106e-8,
    -3.7649544428360228411e-109,
    -9.4146850812952621517e-9,
    -2.7570724103446093416e-108,
    9.5701162108834803019e-10,
    -1.9430625284241274354e-107,
    1.8763137453470662797e-10,
    -1.323953834758181813e-106,
    -4.4378376793233993275e-12,
    -8.7551341928922665284e-106,
    -2.2426738505617353248e-12,
    -5.6369733158110073906e-105,
    -3.6276868657352436894e-14,
    -3.5432294218218855687e-104,
    1.7639809550821581608e-14,
    -2.1793579545202675309e-103,
    7.9607652467867777573e-16,
    -1.314317901432750208e-102,
    -9.4196514905896907639e-17,
    -7.7851458859193457057e-102,
    -7.1331038545696578246e-18,
    -4.5361171486154689806e-101,
    3.2899105845546243212e-19,
    -2.6033340064709491318e-100,
    4.1807303748984592914e-20,
    -1.4733749571260738826e-99,
    -5.5505420716463337898e-22,
    -8.2316495663507845638e-99,
    -1.7870441906260123859e-22,
)

# degree 52, max |C4| on [-1, 1] = 0.00046483389
_C4 = (
    0.00046483389361763381854,
    3.3782693583786286276e-121,
    -0.001005660736534047076,
    4.7390223314737458001e-119,
    0.00024044856573725793022,
    2.5746008152278491616e-117,
    0.0010283086149702321878,
    8.3780056014548724505e-116,
    -0.00076578610717556441866,
    1.9537942802434783005e-114,
    -0.00020365286803084817621,
    3.5937953174690993176e-113,
    0.00023212290491068727895,
    5.5277727568454841784e-112,
    0.000032602144243865197608,
    7.3904259294248277616e-111,
    -0.00002557906251794952514,
    8.824236454515689965e-110,
    -4.107464438915744754e-6,
    9.5976873481763047073e-109,
    1.1781113640371293881e-6,
    9.6520984624105185399e-108,
    2.4456561422484578542e-7,
    9.0795436260630967478e-107,
    -2.391582476734432243e-8,
    8.0624399063570054404e-106,
    -7.5052142070357552885e-9,
    6.8081585593910279559e-105,
    1.3312279416258428193e-10,
    5.500110520965958459e-104,
    1.3440626754225619719e-10,
    4.2722976964987557332e-103,
    3.5137700424304859287e-12,
    3.2041960462190330413e-102,
    -1.5191544533703919336e-12,
    2.3285462520829986824e-101,
    -8.9154176814470873055e-14,
    1.644657996457860154e-100,
    1.1195891165228535773e-14,
    1.1319458836303513582e-99,
    1.0516013329914814964e-15,
    7.6088577567493188382e-99,
    -5.1786552736466836615e-17,
    5.0051474844532558648e-98,
    -8.0658748619165660515e-18,
    3.2275538780466784925e-97,
    1.060820453056396595e-19,
    2.0434166174233782454e-96,
    4.4336806742994087278e-20,
    1.2719204061458452914e-95,
    4.3200511470350152435e-22,
    7.7931198470920945256e-95,
    -1.8230389229596893305e-22,
)

COEFFS = (_C0, _C1, _C2, _C3, _C4)
