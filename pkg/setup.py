from setuptools import find_packages, setup

setup(
    name='entropic-uncertainty',
    packages=find_packages(exclude=['tests']),
    version='0.1.0',
    description='Entropic uncertainty bounds in the presence of quantum memory',
    author='Ankan Das',
    author_email="das.99.ankan@gmail.com",
    license='',
    install_requires=[],  # installed from requirements.txt
    entry_points={'console_scripts': ['eur = src.cli.main:main']},
)
