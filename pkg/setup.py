from setuptools import setup, find_packages

with open("requirements.txt") as f:
	install_requires = f.read().strip().split("\n")

# get version from __version__ variable in hopfcomb/__init__.py
from hopfcomb import __version__ as version

setup(
	name="hopfcomb",
	version=version,
	description="Commutative and cocommutative combinatorial Hopf algebras with exact arithmetic",
	author="Hopfcomb Developers",
	author_email="hopfcomb@users.noreply.github.com",
	packages=find_packages(),
	zip_safe=False,
	include_package_data=True,
	install_requires=install_requires,
	extras_require={"test": ["pytest", "hypothesis"]},
	entry_points={"console_scripts": ["hopfcomb = hopfcomb.cli:main"]}
)
