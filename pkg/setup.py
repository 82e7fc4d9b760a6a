import io
import os
import setuptools
import shutil
import tempfile

from lib.core.settings import VERSION


current_dir = os.path.abspath(os.path.dirname(__file__))
with io.open(os.path.join(current_dir, "README.md"), encoding="utf-8") as fd:
    desc = fd.read()

with io.open(os.path.join(current_dir, "requirements.txt"), encoding="utf-8") as fd:
    requirements = [line.strip() for line in fd if line.strip() and not line.startswith("#")]

env_dir = tempfile.mkdtemp(prefix="ialign-install-")
shutil.copytree(os.path.abspath(os.getcwd()), os.path.join(env_dir, "ialign"))

os.chdir(env_dir)

setuptools.setup(
    name="ialign",
    version=VERSION,
    description="Feasibility, construction and counting of interference alignment for MIMO interference channels",
    long_description=desc,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["*.examples", "*.examples.*"]),
    entry_points={"console_scripts": ["ia=ialign.ia:main"]},
    package_data={"ialign": ["*.ini"]},
    include_package_data=True,
    python_requires=">=3.9",
    install_requires=requirements,
    extras_require={"test": ["hypothesis>=6.0.0"]},
    classifiers=[
        "Programming Language :: Python",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v2 (GPLv2)",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.9",
    ],
    keywords=["interference alignment", "mimo", "grassmannian", "schubert calculus"],
)
