#include "ecvet/registry.hpp"

#include <stdexcept>

namespace ecvet {

namespace {

// The two named curves carry every published quantity; the seed story is an
// attestation (source and length are documented, the draws themselves are
// not), which is what the "somewhat rigid" grade reflects.
const char* kKg256 = R"(name = KG256r1
p = 105659876450476807015340827963890761976980048986351025435035631207814085532543
a = 57780130698115176583488499171344771088898507337873238590400955371129685138826
b = 102451950841073747949316796495896937960702115486975363798323596797327090813462
N = 105659876450476807015340827963890761976544313325663770762399235394744121359871
n = 105659876450476807015340827963890761976544313325663770762399235394744121359871
h = 1
Gx = 5385166333114646497810998074612415985821986371151485954586014078688791960064
Gy = 88440166531789946723126083546750633179866039092883764784041611065547926159080
twist_N = 105659876450476807015340827963890761977415784647038280107672027020884049705217
embedding_degree = 10565987645047680701534082796389076197654431332566377076239923539474412135987
twist_embedding_degree = 4402494852103200292305867831828781749058991026959928337819667792536835404384
cm_discriminant = -232773939807348890850436587536448542043730245608155363125035103075438982165243
n_minus_1_factors = 2 5 224309 47104608575882736321476547068504055555748682988941045951076076035622343
twist_n_minus_1_factors = 2 2 2 2 2 2 2 2 3 137577964128225009134558369744649429658093469592497760556864618516776106387
seed_source = /dev/random
seed_bits = 2000
transcript = prime:0:?
transcript = coefficient-a:0:?
transcript = coefficient-b:0:?
transcript = base-point:0:?
)";

const char* kKg384 = R"(name = KG384r1
p = 30850493656680149340079966421756113888797201705900966381840288086888802411176587972020735012523469267564505420764051
a = 2689376848857934359417998845213258254140716666751951067196901653139051892648485257788827989185822359193013251735562
b = 2826799144410810451940649796749865660531410575292534383976745724330749097582395451638354661270280127278365677483939
N = 30850493656680149340079966421756113888797201705900966381841438754683900390077617323565554872996073979103765917522731
n = 30850493656680149340079966421756113888797201705900966381841438754683900390077617323565554872996073979103765917522731
h = 1
Gx = 26382167469722729078686791539259191084630652622205406190302146794523414127451183423914120811487055055064792875345576
Gy = 20262805131660615219589586646228078501545181834199642151194102089344927295889857293563989127020260020122002404045204
twist_N = 30850493656680149340079966421756113888797201705900966381839137419093704432275558620475915152050864556025244924005373
embedding_degree = 3085049365668014934007996642175611388879720170590096638184143875468390039007761732356555487299607397910376591752273
twist_embedding_degree = 30850493656680149340079966421756113888797201705900966381839137419093704432275558620475915152050864556025244924005372
cm_discriminant = -122077938252044953003302331477262111045540298299278389289312797446442903024630312934566070664359439115013756521231163
n_minus_1_factors = 2 3 5 1374209 69511344899
twist_n_minus_1_factors = 2 2 864737
seed_source = /dev/random
seed_bits = 2000
transcript = prime:0:?
transcript = coefficient-a:0:?
transcript = coefficient-b:0:?
transcript = base-point:0:?
)";

const char* kTrial1 = R"(name = T3-trial-1
p = 87052253706622316800662279631344302713612816742118516445715106163825624186987
a = 17461513680488110202189680065467433355982187313809984308530183605390654503146
b = 4742364534479307087696244304071666435175166931536995811081067226406616322940
Gx = 34562444864263447792289881666782368199808912751831663386444135083641970670103
Gy = 44973717098200324632781286735408077067884851416905001940895476727480258436423
)";

const char* kTrial2 = R"(name = T3-trial-2
p = 83857931886285555818472058950522827195247211639379970952195176566538052148959
a = 15222031410359054028041793088708374885174581007053672026416069700422500171995
b = 75723663712830868158926603330488486312788754915163584116380630010872983931491
Gx = 79991145613299850861660922601873046504314421039422310330231620709939495217575
Gy = 74048930300595054686355764380599730714484651315014966555673263252180995491420
)";

const char* kTrial3 = R"(name = T3-trial-3
p = 115455173683647336766695198555386616062185957400074700902465398650769617153383
a = 89247089594531861167221907824679361896477781827771349654639873760799894221702
b = 47456080838438598020722203116343582455579601993324094611207713288744264819618
Gx = 87380972861908942926601892812209714038534482432156502027178728221855540030831
Gy = 109010224703610275807776999662587399010415605756892207650540783549332069147687
)";

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> entries = [] {
    std::vector<RegistryEntry> v;
    for (const char* text : {kKg256, kKg384, kTrial1, kTrial2, kTrial3})
      v.push_back({parse_curve_file(text), Provenance::PaperFixture});
    return v;
  }();
  return entries;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& e : registry()) names.push_back(e.file.name);
  return names;
}

const RegistryEntry& registry_get(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.file.name == name) return e;
  }
  throw std::out_of_range("no registry entry named '" + name + "'");
}

}  // namespace ecvet
