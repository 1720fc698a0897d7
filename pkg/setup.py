# +
from setuptools import setup


setup(
    name="sl2hat",
    version="v2026.10",
    description="exact verification of sl2-hat Verma module identities "
                "and the twisted de Rham chain map",
    url="https://github.com",
    packages=['sl2hat', 'sl2hat.algebra', 'sl2hat.module', 'sl2hat.derham',
              'sl2hat.io', 'sl2hat.util', 'sl2hat.cl'],
    install_requires=['sympy>=1.12', 'numpy', 'torch', 'hypothesis'],
    extras_require={'test': ['pytest']},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)
