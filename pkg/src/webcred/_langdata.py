"""Bundled training text for the built-in language profiles.

A few hundred words of original, generic prose per language; enough for the
coarse English-vs-not decision the corpus filter needs.  Profiles are built
from these snippets at import time by :mod:`webcred.language`.
"""

ENGLISH = """
The weather in coastal regions tends to change quickly because the ocean
stores and releases heat much more slowly than the land. In the morning the
air above the water is often cooler than the air above the fields, and the
difference in temperature creates a steady breeze that moves from the sea
toward the shore. Sailors and fishermen have relied on this daily pattern
for centuries, planning their departures around the hours when the wind is
most dependable. In the evening the flow reverses, and the warm air that
gathered over the land during the day drifts back out across the water.

A public library is one of the few places where anyone may spend an entire
afternoon without being asked to buy anything. The reading rooms are quiet,
the shelves are arranged by subject, and the staff will help a visitor find
a book about nearly any question that has ever been written down. Many
libraries also keep local newspapers, maps of the town as it looked a
hundred years ago, and records of the families who lived there. People who
want to learn a new trade, follow the news, or simply sit near a window
with a novel are all welcome in the same building.

When a railway line is built through the mountains, engineers must choose
between long tunnels and winding tracks that climb slowly along the valley
walls. Tunnels are expensive to dig but they shorten the journey and
protect the trains from snow. Open tracks cost less at first, yet every
winter the crews must clear the drifts and check the stone bridges for
damage from frost. Over many years the cheaper route often proves the more
costly one, which is why modern lines cross beneath the high passes rather
than over them.

Bread has been baked in roughly the same way for thousands of years. Flour,
water, salt, and a little yeast are mixed into a dough, left to rise in a
warm corner of the kitchen, then shaped and slid into a hot oven. The crust
forms first, trapping the steam inside so the centre stays soft. Every
region keeps its own habits: some bakers fold olives or seeds into the
dough, others brush the top with milk so it browns more deeply. The smell
of a loaf taken fresh from the oven is recognised almost everywhere in the
world, and it is one of the oldest comforts a household can offer a guest.

Rivers have always decided where towns are built. A crossing place with firm
banks attracts a bridge, the bridge attracts a market, and the market
attracts houses, workshops, and inns for travellers who arrive too late in
the day to continue. Goods that are heavy or fragile move more cheaply by
water than by road, so warehouses appear along the quays and boats tie up
beneath the walls. When the river floods, the oldest streets stay dry
because the first builders knew exactly how high the water could rise; it
is the newer districts, laid out in dry decades by people who had forgotten
the old marks, that find themselves bailing out their cellars. Anyone who
wants to understand why a city has its present shape should begin by
standing on its bridge and looking upstream, for the water explains more
than the documents do. The names of the streets often remember trades that
vanished long ago, and the curve of a lane may follow a channel that was
filled in before anyone now living was born.
"""

FRENCH = """
Le temps dans les régions côtières change rapidement parce que la mer garde
la chaleur beaucoup plus longtemps que la terre. Le matin, l'air au-dessus
de l'eau est souvent plus frais que l'air au-dessus des champs, et cette
différence de température crée une brise régulière qui souffle de la mer
vers le rivage. Les marins et les pêcheurs connaissent ce rythme depuis des
siècles et préparent leurs départs selon les heures où le vent est le plus
fiable. Le soir, le mouvement s'inverse, et l'air chaud accumulé sur la
terre pendant la journée retourne lentement vers le large.

Une bibliothèque publique est l'un des rares endroits où chacun peut passer
un après-midi entier sans devoir rien acheter. Les salles de lecture sont
calmes, les rayons sont classés par sujet, et le personnel aide les
visiteurs à trouver un livre sur presque toutes les questions déjà écrites.
Beaucoup de bibliothèques conservent aussi les journaux locaux, des cartes
de la ville telle qu'elle était il y a cent ans, et les registres des
familles qui y ont vécu. Ceux qui veulent apprendre un métier, suivre les
nouvelles ou simplement s'asseoir près d'une fenêtre avec un roman sont
accueillis dans le même bâtiment.

Quand une ligne de chemin de fer traverse les montagnes, les ingénieurs
doivent choisir entre de longs tunnels et des voies sinueuses qui montent
lentement le long des vallées. Les tunnels coûtent cher à creuser, mais ils
raccourcissent le voyage et protègent les trains de la neige. Les voies
ouvertes coûtent moins au début, pourtant chaque hiver les équipes doivent
dégager les congères et vérifier les ponts de pierre abîmés par le gel.
Après de nombreuses années, la route la moins chère devient souvent la plus
coûteuse, et c'est pourquoi les lignes modernes passent sous les cols
plutôt que par-dessus.

Le pain se prépare à peu près de la même façon depuis des milliers
d'années. La farine, l'eau, le sel et un peu de levure sont mélangés en une
pâte, laissée à lever dans un coin chaud de la cuisine, puis façonnée et
glissée dans un four très chaud. La croûte se forme d'abord et retient la
vapeur à l'intérieur, si bien que le cœur reste tendre. Chaque région garde
ses habitudes : certains boulangers ajoutent des olives ou des graines,
d'autres badigeonnent le dessus avec du lait pour qu'il dore davantage.

Les rivières ont toujours décidé de l'emplacement des villes. Un gué aux
rives solides attire un pont, le pont attire un marché, et le marché attire
des maisons, des ateliers et des auberges pour les voyageurs arrivés trop
tard pour continuer leur route. Les marchandises lourdes ou fragiles
voyagent à meilleur prix par l'eau que par la route, alors des entrepôts
s'installent le long des quais et les bateaux s'amarrent sous les murailles.
Quand la rivière déborde, les rues les plus anciennes restent au sec parce
que les premiers bâtisseurs savaient exactement jusqu'où l'eau pouvait
monter; ce sont les quartiers récents, tracés pendant des décennies sèches
par des gens qui avaient oublié les anciennes marques, qui écopent leurs
caves. Celui qui veut comprendre pourquoi une ville a sa forme actuelle
devrait commencer par se tenir sur son pont et regarder vers l'amont, car
l'eau explique davantage que les archives. Les noms des rues rappellent
souvent des métiers disparus depuis longtemps.
"""

GERMAN = """
Das Wetter in den Küstenregionen ändert sich schnell, weil das Meer die
Wärme viel länger speichert als das Land. Am Morgen ist die Luft über dem
Wasser oft kühler als die Luft über den Feldern, und dieser Unterschied
erzeugt eine stetige Brise, die vom Meer zur Küste weht. Seeleute und
Fischer kennen diesen täglichen Rhythmus seit Jahrhunderten und richten
ihre Abfahrten nach den Stunden, in denen der Wind am zuverlässigsten ist.
Am Abend kehrt sich die Strömung um, und die warme Luft, die sich über dem
Land gesammelt hat, zieht langsam wieder auf das Wasser hinaus.

Eine öffentliche Bücherei ist einer der wenigen Orte, an denen jeder einen
ganzen Nachmittag verbringen kann, ohne etwas kaufen zu müssen. Die
Lesesäle sind ruhig, die Regale sind nach Themen geordnet, und die
Mitarbeiter helfen den Besuchern, ein Buch über fast jede Frage zu finden,
die jemals aufgeschrieben wurde. Viele Büchereien bewahren auch die
örtlichen Zeitungen auf, Karten der Stadt, wie sie vor hundert Jahren
aussah, und die Verzeichnisse der Familien, die dort gelebt haben. Wer
einen Beruf lernen, die Nachrichten verfolgen oder einfach mit einem Roman
am Fenster sitzen möchte, ist im selben Gebäude willkommen.

Wenn eine Eisenbahnlinie durch das Gebirge gebaut wird, müssen die
Ingenieure zwischen langen Tunneln und gewundenen Strecken wählen, die
langsam an den Talhängen emporsteigen. Tunnel sind teuer zu graben, aber
sie verkürzen die Reise und schützen die Züge vor dem Schnee. Offene
Strecken kosten zunächst weniger, doch jeden Winter müssen die Mannschaften
die Verwehungen räumen und die steinernen Brücken auf Frostschäden prüfen.
Über viele Jahre erweist sich der billigere Weg oft als der teurere, und
deshalb führen moderne Linien unter den hohen Pässen hindurch statt über
sie hinweg.

Brot wird seit Tausenden von Jahren ungefähr auf die gleiche Weise
gebacken. Mehl, Wasser, Salz und etwas Hefe werden zu einem Teig vermischt,
der in einer warmen Ecke der Küche aufgehen darf, dann geformt und in einen
heißen Ofen geschoben wird. Zuerst bildet sich die Kruste, die den Dampf im
Inneren hält, sodass die Mitte weich bleibt. Jede Gegend pflegt ihre
eigenen Gewohnheiten: Manche Bäcker kneten Oliven oder Samen in den Teig,
andere bestreichen die Oberfläche mit Milch, damit sie dunkler bräunt.

Flüsse haben schon immer entschieden, wo Städte entstehen. Eine Furt mit
festen Ufern zieht eine Brücke an, die Brücke zieht einen Markt an, und der
Markt zieht Häuser, Werkstätten und Gasthöfe für jene Reisenden an, die zu
spät ankommen, um weiterzufahren. Schwere oder zerbrechliche Waren reisen
auf dem Wasser billiger als auf der Straße, deshalb entstehen Lagerhäuser
an den Kais, und die Boote machen unter den Mauern fest. Wenn der Fluss
über die Ufer tritt, bleiben die ältesten Gassen trocken, weil die ersten
Baumeister genau wussten, wie hoch das Wasser steigen konnte; es sind die
neueren Viertel, in trockenen Jahrzehnten von Leuten angelegt, welche die
alten Marken vergessen hatten, die ihre Keller ausschöpfen müssen. Wer
verstehen will, warum eine Stadt ihre heutige Gestalt hat, sollte auf ihrer
Brücke stehen und stromaufwärts blicken, denn das Wasser erklärt mehr als
die Urkunden. Die Straßennamen erinnern oft an Gewerbe, die längst
verschwunden sind.
"""

SPANISH = """
El tiempo en las regiones costeras cambia rápidamente porque el mar guarda
el calor mucho más tiempo que la tierra. Por la mañana, el aire sobre el
agua suele ser más fresco que el aire sobre los campos, y esa diferencia de
temperatura crea una brisa constante que sopla desde el mar hacia la
orilla. Los marineros y los pescadores conocen este ritmo diario desde hace
siglos y preparan sus salidas según las horas en que el viento es más
fiable. Por la tarde el movimiento se invierte, y el aire cálido acumulado
sobre la tierra durante el día vuelve lentamente hacia el agua.

Una biblioteca pública es uno de los pocos lugares donde cualquiera puede
pasar una tarde entera sin que le pidan comprar nada. Las salas de lectura
son tranquilas, las estanterías están ordenadas por temas, y el personal
ayuda a los visitantes a encontrar un libro sobre casi cualquier pregunta
que se haya escrito. Muchas bibliotecas conservan también los periódicos
locales, mapas de la ciudad tal como era hace cien años, y los registros de
las familias que vivieron allí. Quien quiera aprender un oficio, seguir las
noticias o simplemente sentarse junto a una ventana con una novela es
bienvenido en el mismo edificio.

Cuando una línea de ferrocarril se construye a través de las montañas, los
ingenieros deben elegir entre túneles largos y vías sinuosas que suben
despacio por las laderas del valle. Los túneles son caros de excavar, pero
acortan el viaje y protegen a los trenes de la nieve. Las vías abiertas
cuestan menos al principio, aunque cada invierno las cuadrillas deben
despejar la nieve acumulada y revisar los puentes de piedra dañados por la
helada. Con los años, el camino más barato suele resultar el más costoso, y
por eso las líneas modernas cruzan por debajo de los puertos altos en lugar
de pasar por encima.

El pan se hornea casi de la misma manera desde hace miles de años. La
harina, el agua, la sal y un poco de levadura se mezclan en una masa, se
deja crecer en un rincón cálido de la cocina, y luego se forma y se mete en
un horno muy caliente. La corteza se forma primero y atrapa el vapor en el
interior, de modo que el centro queda tierno. Cada región mantiene sus
costumbres: algunos panaderos añaden aceitunas o semillas a la masa, otros
pintan la parte superior con leche para que se dore más.

Los ríos siempre han decidido dónde se construyen las ciudades. Un vado de
orillas firmes atrae un puente, el puente atrae un mercado, y el mercado
atrae casas, talleres y posadas para los viajeros que llegan demasiado
tarde para seguir su camino. Las mercancías pesadas o frágiles viajan más
barato por el agua que por el camino, así que los almacenes aparecen a lo
largo de los muelles y los barcos amarran bajo las murallas. Cuando el río
se desborda, las calles más antiguas permanecen secas porque los primeros
constructores sabían exactamente hasta dónde podía subir el agua; son los
barrios nuevos, trazados en décadas secas por gente que había olvidado las
viejas marcas, los que achican sus sótanos. Quien quiera entender por qué
una ciudad tiene su forma actual debería empezar por situarse en su puente
y mirar río arriba, porque el agua explica más que los documentos. Los
nombres de las calles recuerdan a menudo oficios desaparecidos hace mucho
tiempo.
"""

PROFILE_TEXTS = {
    "en": ENGLISH,
    "fr": FRENCH,
    "de": GERMAN,
    "es": SPANISH,
}
