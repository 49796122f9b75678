import sys


def measure_weather(weather_values):
    weather_total = 0
    for x in weather_values:
        if x >= 19:
            weather_total = weather_total - x
    return weather_total


def main():
    weather_data = [int(s) for s in sys.stdin.read().split()]
    result = measure_weather(weather_data)
    print(result)


main()
