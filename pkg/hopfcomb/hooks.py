from . import __version__ as app_version

app_name = "hopfcomb"
app_title = "Hopfcomb"
app_publisher = "Hopfcomb Developers"
app_description = "Commutative and cocommutative combinatorial Hopf algebras"
app_email = "hopfcomb@users.noreply.github.com"
app_license = "MIT"

# Algebras
# --------
# algebra id -> basis id -> class implementing the basis

algebras = {
	"eqsym": {
		"M": "hopfcomb.hopf_algebras.eqsym.EQSym",
		"S": "hopfcomb.hopf_algebras.eqsym.ESym",
	},
	"sgqsym": {
		"M": "hopfcomb.hopf_algebras.sgqsym.SGQSym",
		"S": "hopfcomb.hopf_algebras.sgqsym.SGSym",
	},
	"piqsym": {
		"upi": "hopfcomb.hopf_algebras.sgqsym.PiQSym",
	},
	"wsym": {
		"Mw": "hopfcomb.hopf_algebras.sgqsym.WSym",
		"Sw": "hopfcomb.hopf_algebras.sgqsym.WSymCoarse",
		"V": "hopfcomb.hopf_algebras.sgqsym.WSymQuotient",
	},
	"qsym-embed": {
		"uq": "hopfcomb.hopf_algebras.sgqsym.QSymEmbedded",
	},
	"sym-embed": {
		"ul": "hopfcomb.hopf_algebras.sgqsym.SymEmbedded",
	},
	"phisym": {
		"phi": "hopfcomb.hopf_algebras.phisym.PhiSym",
		"Sp": "hopfcomb.hopf_algebras.phisym.PhiSymSprime",
		"Ss": "hopfcomb.hopf_algebras.phisym.PhiSymSsecond",
		"Y": "hopfcomb.hopf_algebras.phisym.PhiSymQuotient",
	},
	"cpqsym": {
		"Mpa": "hopfcomb.hopf_algebras.parkfunc.CPQSym",
		"G": "hopfcomb.hopf_algebras.parkfunc.UnlabelledParkingGraphs",
	},
	"ccqsym": {
		"M": "hopfcomb.hopf_algebras.parkfunc.CCQSym",
		"S": "hopfcomb.hopf_algebras.parkfunc.CCQSymDual",
	},
	"forest": {
		"MF": "hopfcomb.hopf_algebras.parkfunc.Forests",
	},
	"stalactic": {
		"park": "hopfcomb.hopf_algebras.stalactic.ParkingClasses",
		"endo": "hopfcomb.hopf_algebras.stalactic.EndofunctionClasses",
		"init": "hopfcomb.hopf_algebras.stalactic.InitialWordClasses",
	},
	"fqsym-q": {
		"F": "hopfcomb.hopf_algebras.qdeform.FQSymQ",
		"F0": "hopfcomb.hopf_algebras.qdeform.FQSymQ0",
	},
	"qsym-q": {
		"M": "hopfcomb.hopf_algebras.qdeform.QSymQ",
	},
	"ncsf-q": {
		"S": "hopfcomb.hopf_algebras.qdeform.NCSFQ",
	},
	"sym": {
		"m": "hopfcomb.hopf_algebras.symfunc.SymM",
		"e": "hopfcomb.hopf_algebras.symfunc.SymE",
		"h": "hopfcomb.hopf_algebras.symfunc.SymH",
		"p": "hopfcomb.hopf_algebras.symfunc.SymP",
		"s": "hopfcomb.hopf_algebras.symfunc.SymS",
	},
}

# Counting families
# -----------------
# family id used by `count` -> callable taking n, or (callable, kind)

count_families = {
	"endofunctions": ("hopfcomb.hopf_algebras.combinat.count_objects", "endofunctions"),
	"permutations": ("hopfcomb.hopf_algebras.combinat.count_objects", "permutations"),
	"parking": ("hopfcomb.hopf_algebras.combinat.count_objects", "parking"),
	"nondecreasing-parking": ("hopfcomb.hopf_algebras.combinat.count_objects", "nondecreasing-parking"),
	"set-partitions": ("hopfcomb.hopf_algebras.combinat.count_objects", "set-partitions"),
	"initial-words": ("hopfcomb.hopf_algebras.combinat.count_objects", "initial-words"),
	"involutions": ("hopfcomb.hopf_algebras.combinat.count_objects", "involutions"),
	"connected-endofunctions": "hopfcomb.hopf_algebras.eqsym.connected_count",
	"lie-dims": "hopfcomb.hopf_algebras.eqsym.lie_dims",
	"parking-stalactic": "hopfcomb.hopf_algebras.stalactic.parking_class_count",
	"endofunctions-stalactic": "hopfcomb.hopf_algebras.stalactic.endofunction_class_count",
	"initial-words-stalactic": "hopfcomb.hopf_algebras.stalactic.initial_word_class_count",
	"unlabelled-parking-graphs": "hopfcomb.hopf_algebras.parkfunc.unlabelled_count",
	"derangements": "hopfcomb.hopf_algebras.symfunc.derangements",
	"c-coefficients": "hopfcomb.hopf_algebras.stalactic.c_coefficient",
	"qs-classes": "hopfcomb.hopf_algebras.qdeform.sylvester_class_count",
	"qh-classes": "hopfcomb.hopf_algebras.qdeform.hypoplactic_class_count",
}

# Basis changes
# -------------
# algebra id -> function (element, target basis id) -> element

basis_changes = {
	"sym": "hopfcomb.hopf_algebras.symfunc.convert",
	"phisym": "hopfcomb.hopf_algebras.phisym.change_basis",
	"piqsym": "hopfcomb.hopf_algebras.sgqsym.change_basis",
	"wsym": "hopfcomb.hopf_algebras.sgqsym.change_basis",
	"qsym-embed": "hopfcomb.hopf_algebras.sgqsym.change_basis",
	"sym-embed": "hopfcomb.hopf_algebras.sgqsym.change_basis",
	"fqsym-q": "hopfcomb.hopf_algebras.qdeform.change_basis",
	"qsym-q": "hopfcomb.hopf_algebras.qdeform.change_basis",
}

# Checks
# ------
# check id used by `verify --check` -> callable taking the degree bound

checks = {
	"eqsym-free-dimension": "hopfcomb.hopf_algebras.eqsym.free_dimension_check",
	"wsym-quotient": "hopfcomb.hopf_algebras.sgqsym.quotient_independence_check",
	"sym-embed-identities": "hopfcomb.hopf_algebras.sgqsym.identity_check",
	"phisym-y-independence": "hopfcomb.hopf_algebras.phisym.representative_independence_check",
	"phisym-sym-iso": "hopfcomb.hopf_algebras.phisym.iso_check",
	"phisym-sprime-products": "hopfcomb.hopf_algebras.phisym.sprime_product_check",
	"phisym-ssecond-sgsym": "hopfcomb.hopf_algebras.phisym.ssecond_matches_sgsym",
	"stalactic-closure": "hopfcomb.hopf_algebras.stalactic.closure_check",
	"stalactic-q-fiber": "hopfcomb.hopf_algebras.stalactic.q_fiber_check",
	"cpqsym-closure": "hopfcomb.hopf_algebras.parkfunc.parking_closure_check",
	"cpqsym-polynomial-dims": "hopfcomb.hopf_algebras.parkfunc.polynomial_dimension_check",
	"cpqsym-certificate": "hopfcomb.hopf_algebras.parkfunc.certificate_check",
	"cpqsym-labelling-closure": "hopfcomb.hopf_algebras.parkfunc.labelling_closure_check",
	"ccqsym-ideal": "hopfcomb.hopf_algebras.parkfunc.ideal_check",
	"ccqsym-catalan": "hopfcomb.hopf_algebras.parkfunc.catalan_freeness_check",
	"forest-closure": "hopfcomb.hopf_algebras.parkfunc.forest_closure_check",
	"fqsym-q-phi": "hopfcomb.hopf_algebras.qdeform.phi_morphism_check",
	"fqsym-q0-cocommutative": "hopfcomb.hopf_algebras.qdeform.cocommutativity_check",
	"qs-confluence": "hopfcomb.hopf_algebras.qdeform.sylvester_confluence_check",
	"qh-confluence": "hopfcomb.hopf_algebras.qdeform.hypoplactic_confluence_check",
}

# Triangles
# ---------

triangles = ["narayana", "lah", "tw", "endt", "pascal", "arr"]

# Resource Limits
# ---------------
# overridden by HOPFCOMB_MAX_DEGREE or the CLI --limit flag

resource_limits = {
	"max_degree": 8,
	"max_enumeration": 1000000,
	"max_word_length": 10,
	"max_rewrite_length": 10,
}
